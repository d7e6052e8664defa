#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "prealg/error.hpp"

namespace prealg {

enum class DomainKind { Rationals, PrimeField, ResidueRing };

/// How multiplication by 2 behaves in a coefficient domain.
enum class TwoProfile { TwoInvertible, TwoTorsionFreeOnly, CharacteristicTwo, TwoTorsion };

/// An exact commutative coefficient domain: the rationals, a prime field
/// F_p, or a residue ring Z/nZ (n possibly composite).
class CoeffDomain {
 public:
  static CoeffDomain rationals();
  static CoeffDomain prime_field(std::int64_t p);   // validates primality
  static CoeffDomain residue_ring(std::int64_t n);  // n >= 2

  DomainKind kind() const noexcept { return kind_; }
  /// 0 for Q, p for F_p, n for Z/nZ.
  std::int64_t characteristic() const noexcept { return mod_; }
  std::int64_t modulus() const noexcept { return mod_; }
  bool is_field() const noexcept { return kind_ != DomainKind::ResidueRing; }
  TwoProfile two_profile() const noexcept;

  bool operator==(const CoeffDomain&) const = default;
  std::string str() const;

 private:
  CoeffDomain(DomainKind k, std::int64_t m) : kind_(k), mod_(m) {}
  DomainKind kind_;
  std::int64_t mod_;  // 0 for rationals
};

bool is_prime(std::int64_t n);

/// Exact scalar in a fixed coefficient domain. Representation is canonical
/// (reduced fraction over Q, least nonnegative residue otherwise), so
/// equality of scalars is representational equality.
class Scalar {
 public:
  Scalar() : dom_(CoeffDomain::rationals()) {}

  static Scalar zero(const CoeffDomain& d);
  static Scalar one(const CoeffDomain& d);
  static Scalar of_int(const CoeffDomain& d, std::int64_t v);
  static Scalar of_mpz(const CoeffDomain& d, const mpz_class& v);
  /// Accepts "a" or "a/b" (b > 0 after sign normalization); over modular
  /// domains "a/b" means a * b^{-1} and fails if b is not invertible.
  static Scalar parse(const CoeffDomain& d, std::string_view text);

  const CoeffDomain& domain() const noexcept { return dom_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::optional<Scalar> try_invert() const;

  /// Canonical text form: "a" or "a/b" with b > 0 and gcd(|a|, b) = 1.
  std::string str() const;

  /// Total order on canonical representatives (for deterministic output).
  int cmp(const Scalar& o) const;

  /// Residue value for modular domains.
  std::int64_t residue() const;
  const mpq_class& rational() const;

 private:
  void check_same_domain(const Scalar& o) const;
  CoeffDomain dom_;
  mpq_class q_;          // used iff dom_.kind() == Rationals
  std::int64_t r_ = 0;   // used otherwise, in [0, modulus)
};

}  // namespace prealg
