#pragma once

// Shared test helpers: a deterministic RNG (stable across platforms, unlike
// std::uniform_int_distribution) and random generators for scalars,
// algebras, matrices, and nearby objects.

#include <cstdint>
#include <vector>

#include "prealg/algebra.hpp"
#include "prealg/identities.hpp"
#include "prealg/linear.hpp"

namespace test_support {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline prealg::Scalar random_scalar(Rng& rng, const prealg::CoeffDomain& d) {
  using namespace prealg;
  if (d.kind() == DomainKind::Rationals) {
    std::int64_t num = rng.in_range(-6, 6);
    std::int64_t den = rng.in_range(1, 4);
    return Scalar::of_int(d, num) * *Scalar::of_int(d, den).try_invert();
  }
  return Scalar::of_int(d, static_cast<std::int64_t>(rng.below(d.modulus())));
}

inline prealg::Vec random_vec(Rng& rng, const prealg::CoeffDomain& d, std::size_t n) {
  prealg::Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, d));
  return v;
}

inline prealg::Matrix random_matrix(Rng& rng, const prealg::CoeffDomain& d, std::size_t rows,
                                    std::size_t cols) {
  prealg::Matrix m(d, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(rng, d);
  return m;
}

inline prealg::Algebra random_algebra(Rng& rng, const prealg::CoeffDomain& d, std::size_t dim,
                                      const std::string& name = "rand") {
  using namespace prealg;
  std::vector<Vec> sc;
  sc.reserve(dim * dim);
  for (std::size_t i = 0; i < dim * dim; ++i) sc.push_back(random_vec(rng, d, dim));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  return Algebra(name, d, dim, labels, std::move(sc));
}

/// The running example: dim 2, e1 e1 = e1, e1 e2 = e2, other products zero.
/// Associative (it is k + a one-sided module), hence pre-Lie.
inline prealg::Algebra a2(const prealg::CoeffDomain& d) {
  using namespace prealg;
  std::vector<Vec> sc(4, zero_vec(d, 2));
  sc[0 * 2 + 0] = unit_vec(d, 2, 0);  // e1 e1 = e1
  sc[0 * 2 + 1] = unit_vec(d, 2, 1);  // e1 e2 = e2
  return Algebra("A2", d, 2, {"e1", "e2"}, sc);
}

/// dim 2, e1 e1 = e2, e2 e1 = e1, other products zero. Not pre-Lie.
inline prealg::Algebra non_pre_lie_example(const prealg::CoeffDomain& d) {
  using namespace prealg;
  std::vector<Vec> sc(4, zero_vec(d, 2));
  sc[0 * 2 + 0] = unit_vec(d, 2, 1);
  sc[1 * 2 + 0] = unit_vec(d, 2, 0);
  return Algebra("NPL", d, 2, {"e1", "e2"}, sc);
}

/// Known associative families with a random invertible change of basis:
/// products of fields, truncated polynomial algebras, A2 padded by zeros,
/// and the zero algebra.
inline prealg::Algebra random_associative_algebra(Rng& rng, const prealg::CoeffDomain& d,
                                                  std::size_t dim) {
  using namespace prealg;
  std::vector<Vec> sc(dim * dim, zero_vec(d, dim));
  switch (rng.below(4)) {
    case 0:  // product of 1-dim fields: e_i e_j = delta_ij e_i
      for (std::size_t i = 0; i < dim; ++i) sc[i * dim + i] = unit_vec(d, dim, i);
      break;
    case 1:  // truncated polynomials t^1..t^dim with t^(dim+1) = 0
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          if (i + j + 1 < dim) sc[i * dim + j] = unit_vec(d, dim, i + j + 1);
      break;
    case 2:  // A2 (noncommutative) padded by a zero algebra
      sc[0 * dim + 0] = unit_vec(d, dim, 0);
      if (dim >= 2) sc[0 * dim + 1] = unit_vec(d, dim, 1);
      break;
    default:  // zero algebra
      break;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  Algebra base("assoc", d, dim, labels, sc);
  // transport along a random invertible T: new product x *' y = T^{-1}(T(x) T(y))
  Matrix t(d, dim, dim);
  while (true) {
    t = random_matrix(rng, d, dim, dim);
    try {
      (void)inverse(t);
      break;
    } catch (const Error&) {
    }
  }
  Matrix tinv = inverse(t);
  std::vector<Vec> tsc;
  tsc.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      tsc.push_back(tinv.apply(base.mul(t.column(i), t.column(j))));
  return Algebra("assoc.t", d, dim, labels, std::move(tsc));
}

inline prealg::Algebra random_non_pre_lie(Rng& rng, const prealg::CoeffDomain& d, std::size_t dim,
                                          int max_tries = 1000) {
  for (int i = 0; i < max_tries; ++i) {
    prealg::Algebra a = random_algebra(rng, d, dim);
    if (!prealg::is_pre_lie(a).holds) return a;
  }
  throw std::runtime_error("could not sample a non-pre-Lie algebra");
}

/// All 2^(dim^2 * dim) structure-constant tensors over F_2 would be too
/// many in general; for dim 2 over F_2 there are 2^8 = 256 algebras.
inline std::vector<prealg::Algebra> all_f2_dim2_algebras() {
  using namespace prealg;
  CoeffDomain f2 = CoeffDomain::prime_field(2);
  std::vector<Algebra> out;
  out.reserve(256);
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::vector<Vec> sc(4, zero_vec(f2, 2));
    for (std::size_t entry = 0; entry < 8; ++entry) {
      if (bits & (1u << entry)) sc[entry / 2][entry % 2] = Scalar::one(f2);
    }
    out.push_back(Algebra("F2d2#" + std::to_string(bits), f2, 2, {"e1", "e2"}, sc));
  }
  return out;
}

}  // namespace test_support
