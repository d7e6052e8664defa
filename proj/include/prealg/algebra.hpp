#pragma once

#include <string>
#include <vector>

#include "prealg/linear.hpp"

namespace prealg {

/// Finite-dimensional algebra over a coefficient domain, given by its
/// structure constants: basis_product(i, j) is the coordinate vector of
/// e_i * e_j. The bilinear product is not assumed associative or
/// commutative. Equality ignores name and basis labels.
class Algebra {
 public:
  Algebra(std::string name, const CoeffDomain& d, std::size_t dim,
          std::vector<std::string> basis_labels, std::vector<Vec> sc);

  static Algebra zero(std::string name, const CoeffDomain& d, std::size_t dim);

  const std::string& name() const noexcept { return name_; }
  const CoeffDomain& domain() const noexcept { return dom_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }

  const Vec& basis_product(std::size_t i, std::size_t j) const { return sc_[i * dim_ + j]; }
  const std::vector<Vec>& structure_constants() const noexcept { return sc_; }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec bracket(const Vec& x, const Vec& y) const;  // xy - yx
  Vec circle(const Vec& x, const Vec& y) const;   // xy + yx
  Vec associator(const Vec& x, const Vec& y, const Vec& z) const;  // (xy)z - x(yz)

  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec circle_basis(std::size_t i, std::size_t j) const;

  /// (A, [-,-]): the sub-adjacent anticommutative algebra.
  Algebra commutator_algebra() const;
  /// (A, o) with x o y = xy + yx: always commutative.
  Algebra anticommutator_algebra() const;
  Algebra opposite() const;
  Algebra scaled_product(const Scalar& c, const std::string& suffix) const;

  /// Matrix of left multiplication by x: columns are x * e_j.
  Matrix left_mul_matrix(const Vec& x) const;
  Matrix right_mul_matrix(const Vec& x) const;

  bool operator==(const Algebra& o) const;

  Algebra renamed(std::string new_name) const;

 private:
  std::string name_;
  CoeffDomain dom_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vec> sc_;  // sc_[i*dim+j] = e_i e_j
};

/// Symmetric/antisymmetric halves of a product: comm[i][j] = (sc+scT)/2,
/// anticomm[i][j] = (sc-scT)/2, so that sc = comm + anticomm.
struct BilinearSplit {
  std::vector<Vec> comm;
  std::vector<Vec> anticomm;
};

BilinearSplit split_product(const Algebra& a);  // requires 2 invertible
Algebra commutative_part_algebra(const Algebra& a, const BilinearSplit& s);
Algebra anticommutative_part_algebra(const Algebra& a, const BilinearSplit& s);
Algebra recombine(const Algebra& a, const BilinearSplit& s);

/// {x : 2x = 0} as a subspace; field domains only.
Subspace ann2_module(const Algebra& a);
/// Elementwise membership in ann(2); works over any domain.
bool ann2_contains(const Vec& v);

struct ScalingIsoReport {
  bool pass = false;
  std::string detail;
};

/// Verifies x -> x/2 is a bijective algebra morphism (M, *) -> (M, 2*).
ScalingIsoReport scaling_iso_check(const Algebra& a);

}  // namespace prealg
