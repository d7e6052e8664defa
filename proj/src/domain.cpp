#include "prealg/domain.hpp"

#include <cctype>
#include <numeric>
#include <utility>

namespace prealg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NonFieldDomain: return "NonFieldDomain";
    case Errc::TwoNotInvertible: return "TwoNotInvertible";
    case Errc::TwoTorsionDomain: return "TwoTorsionDomain";
    case Errc::TwoTorsionTarget: return "TwoTorsionTarget";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAPreMorphism: return "NotAPreMorphism";
    case Errc::NotPreIdeal: return "NotPreIdeal";
    case Errc::NotPreSubalgebra: return "NotPreSubalgebra";
    case Errc::NotIdeal: return "NotIdeal";
    case Errc::NotGeneralizedIdeal: return "NotGeneralizedIdeal";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotIdempotentOfKind: return "NotIdempotentOfKind";
    case Errc::InvalidPair: return "InvalidPair";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::ParamConstraintViolated: return "ParamConstraintViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t normalize_mod(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

// gcd(a, n) = 1 -> inverse of a mod n.
std::optional<std::int64_t> invmod(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, new_t = 1, r = n, new_r = normalize_mod(a, n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  return normalize_mod(t, n);
}

}  // namespace

bool is_prime(std::int64_t n) { return n >= 2 && miller_rabin(static_cast<u64>(n)); }

CoeffDomain CoeffDomain::rationals() { return CoeffDomain(DomainKind::Rationals, 0); }

CoeffDomain CoeffDomain::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "prime field modulus " + std::to_string(p) + " is not prime");
  return CoeffDomain(DomainKind::PrimeField, p);
}

CoeffDomain CoeffDomain::residue_ring(std::int64_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "residue ring modulus must be >= 2");
  return CoeffDomain(DomainKind::ResidueRing, n);
}

TwoProfile CoeffDomain::two_profile() const noexcept {
  if (kind_ == DomainKind::Rationals) return TwoProfile::TwoInvertible;
  if (mod_ == 2) return TwoProfile::CharacteristicTwo;
  if (mod_ % 2 == 0) return TwoProfile::TwoTorsion;
  return TwoProfile::TwoInvertible;
}

std::string CoeffDomain::str() const {
  switch (kind_) {
    case DomainKind::Rationals: return "Q";
    case DomainKind::PrimeField: return "F" + std::to_string(mod_);
    case DomainKind::ResidueRing: return "Z/" + std::to_string(mod_);
  }
  return "?";
}

Scalar Scalar::zero(const CoeffDomain& d) {
  Scalar s;
  s.dom_ = d;
  return s;
}

Scalar Scalar::one(const CoeffDomain& d) { return of_int(d, 1); }

Scalar Scalar::of_int(const CoeffDomain& d, std::int64_t v) {
  Scalar s;
  s.dom_ = d;
  if (d.kind() == DomainKind::Rationals) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    s.r_ = normalize_mod(v, d.modulus());
  }
  return s;
}

Scalar Scalar::of_mpz(const CoeffDomain& d, const mpz_class& v) {
  Scalar s;
  s.dom_ = d;
  if (d.kind() == DomainKind::Rationals) {
    s.q_ = mpq_class(v);
  } else {
    mpz_class m(static_cast<long>(d.modulus())), r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    s.r_ = r.get_si();
  }
  return s;
}

Scalar Scalar::parse(const CoeffDomain& d, std::string_view text) {
  auto fail = [&] { throw Error(Errc::ParseError, "malformed scalar '" + std::string(text) + "'"); };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail();
  mpz_class num(std::string(text.substr(0, i)), 10);
  mpz_class den(1);
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) fail();
    den = mpz_class(std::string(text.substr(den_begin)), 10);
    if (den == 0) fail();
  }
  Scalar n = of_mpz(d, num);
  if (den == 1) return n;
  Scalar b = of_mpz(d, den);
  auto inv = b.try_invert();
  if (!inv) throw Error(Errc::ParseError, "denominator not invertible in " + d.str() + ": '" + std::string(text) + "'");
  return n * *inv;
}

bool Scalar::is_zero() const {
  return dom_.kind() == DomainKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return dom_.kind() == DomainKind::Rationals ? q_ == 1 : r_ == 1 % dom_.modulus();
}

void Scalar::check_same_domain(const Scalar& o) const {
  if (dom_ != o.dom_)
    throw Error(Errc::DomainMismatch, "scalar domains differ: " + dom_.str() + " vs " + o.dom_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_domain(o);
  Scalar s;
  s.dom_ = dom_;
  if (dom_.kind() == DomainKind::Rationals) {
    s.q_ = q_ + o.q_;
    s.q_.canonicalize();
  } else {
    s.r_ = normalize_mod(r_ + o.r_, dom_.modulus());
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_domain(o);
  Scalar s;
  s.dom_ = dom_;
  if (dom_.kind() == DomainKind::Rationals) {
    s.q_ = q_ - o.q_;
    s.q_.canonicalize();
  } else {
    s.r_ = normalize_mod(r_ - o.r_, dom_.modulus());
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_domain(o);
  Scalar s;
  s.dom_ = dom_;
  if (dom_.kind() == DomainKind::Rationals) {
    s.q_ = q_ * o.q_;
    s.q_.canonicalize();
  } else {
    s.r_ = static_cast<std::int64_t>(mulmod(static_cast<u64>(r_), static_cast<u64>(o.r_),
                                            static_cast<u64>(dom_.modulus())));
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.dom_ = dom_;
  if (dom_.kind() == DomainKind::Rationals) {
    s.q_ = -q_;
  } else {
    s.r_ = normalize_mod(-r_, dom_.modulus());
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (dom_ != o.dom_) return false;
  return dom_.kind() == DomainKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::optional<Scalar> Scalar::try_invert() const {
  if (dom_.kind() == DomainKind::Rationals) {
    if (q_ == 0) return std::nullopt;
    Scalar s;
    s.dom_ = dom_;
    s.q_ = 1 / q_;
    s.q_.canonicalize();
    return s;
  }
  auto inv = invmod(r_, dom_.modulus());
  if (!inv) return std::nullopt;
  Scalar s;
  s.dom_ = dom_;
  s.r_ = *inv;
  return s;
}

std::string Scalar::str() const {
  if (dom_.kind() == DomainKind::Rationals) {
    return q_.get_str();
  }
  return std::to_string(r_);
}

int Scalar::cmp(const Scalar& o) const {
  check_same_domain(o);
  if (dom_.kind() == DomainKind::Rationals) {
    int c = ::cmp(q_, o.q_);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  return r_ < o.r_ ? -1 : r_ > o.r_ ? 1 : 0;
}

std::int64_t Scalar::residue() const {
  if (dom_.kind() == DomainKind::Rationals)
    throw Error(Errc::InvalidArgument, "residue() on a rational scalar");
  return r_;
}

const mpq_class& Scalar::rational() const {
  if (dom_.kind() != DomainKind::Rationals)
    throw Error(Errc::InvalidArgument, "rational() on a modular scalar");
  return q_;
}

}  // namespace prealg
