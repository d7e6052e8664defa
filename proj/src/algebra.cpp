#include "prealg/algebra.hpp"

#include <set>

namespace prealg {

Algebra::Algebra(std::string name, const CoeffDomain& d, std::size_t dim,
                 std::vector<std::string> basis_labels, std::vector<Vec> sc)
    : name_(std::move(name)), dom_(d), dim_(dim), labels_(std::move(basis_labels)), sc_(std::move(sc)) {
  // dim 0 is allowed internally (quotients by the full space); the file
  // format requires dim >= 1.
  if (labels_.size() != dim_) throw Error(Errc::InvalidArgument, "basis label count != dim");
  std::set<std::string> distinct(labels_.begin(), labels_.end());
  if (distinct.size() != dim_) throw Error(Errc::InvalidArgument, "basis labels must be distinct");
  if (sc_.size() != dim_ * dim_) throw Error(Errc::DimensionMismatch, "structure constant shape");
  for (const Vec& v : sc_) {
    if (v.size() != dim_) throw Error(Errc::DimensionMismatch, "structure constant vector length");
    for (const Scalar& s : v)
      if (s.domain() != dom_) throw Error(Errc::DomainMismatch, "structure constant domain");
  }
}

Algebra Algebra::zero(std::string name, const CoeffDomain& d, std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  return Algebra(std::move(name), d, dim, std::move(labels),
                 std::vector<Vec>(dim * dim, zero_vec(d, dim)));
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(Errc::DimensionMismatch, "mul operand length");
  for (std::size_t i = 0; i < dim_; ++i)
    if (x[i].domain() != dom_ || y[i].domain() != dom_)
      throw Error(Errc::DomainMismatch, "mul operand domain differs from algebra domain");
  Vec r = zero_vec(dom_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      const Vec& p = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!p[k].is_zero()) r[k] += c * p[k];
    }
  }
  return r;
}

Vec Algebra::bracket(const Vec& x, const Vec& y) const { return sub(mul(x, y), mul(y, x)); }

Vec Algebra::circle(const Vec& x, const Vec& y) const { return add(mul(x, y), mul(y, x)); }

Vec Algebra::associator(const Vec& x, const Vec& y, const Vec& z) const {
  return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
}

Vec Algebra::bracket_basis(std::size_t i, std::size_t j) const {
  return sub(basis_product(i, j), basis_product(j, i));
}

Vec Algebra::circle_basis(std::size_t i, std::size_t j) const {
  return add(basis_product(i, j), basis_product(j, i));
}

Algebra Algebra::commutator_algebra() const {
  std::vector<Vec> sc;
  sc.reserve(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) sc.push_back(bracket_basis(i, j));
  return Algebra(name_ + ".U", dom_, dim_, labels_, std::move(sc));
}

Algebra Algebra::anticommutator_algebra() const {
  std::vector<Vec> sc;
  sc.reserve(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) sc.push_back(circle_basis(i, j));
  return Algebra(name_ + ".C", dom_, dim_, labels_, std::move(sc));
}

Algebra Algebra::opposite() const {
  std::vector<Vec> sc;
  sc.reserve(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) sc.push_back(basis_product(j, i));
  return Algebra(name_ + ".op", dom_, dim_, labels_, std::move(sc));
}

Algebra Algebra::scaled_product(const Scalar& c, const std::string& suffix) const {
  std::vector<Vec> sc;
  sc.reserve(dim_ * dim_);
  for (const Vec& v : sc_) sc.push_back(scale(c, v));
  return Algebra(name_ + suffix, dom_, dim_, labels_, std::move(sc));
}

Matrix Algebra::left_mul_matrix(const Vec& x) const {
  Matrix m(dom_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = mul(x, unit_vec(dom_, dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_mul_matrix(const Vec& x) const {
  Matrix m(dom_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = mul(unit_vec(dom_, dim_, j), x);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool Algebra::operator==(const Algebra& o) const {
  return dom_ == o.dom_ && dim_ == o.dim_ && sc_ == o.sc_;
}

Algebra Algebra::renamed(std::string new_name) const {
  return Algebra(std::move(new_name), dom_, dim_, labels_, sc_);
}

BilinearSplit split_product(const Algebra& a) {
  if (a.domain().two_profile() != TwoProfile::TwoInvertible)
    throw Error(Errc::TwoNotInvertible, "2 is not invertible in " + a.domain().str());
  Scalar half = *Scalar::of_int(a.domain(), 2).try_invert();
  BilinearSplit s;
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.comm.push_back(scale(half, a.circle_basis(i, j)));
      s.anticomm.push_back(scale(half, a.bracket_basis(i, j)));
    }
  return s;
}

Algebra commutative_part_algebra(const Algebra& a, const BilinearSplit& s) {
  return Algebra(a.name() + ".comm", a.domain(), a.dim(), a.basis_labels(), s.comm);
}

Algebra anticommutative_part_algebra(const Algebra& a, const BilinearSplit& s) {
  return Algebra(a.name() + ".anticomm", a.domain(), a.dim(), a.basis_labels(), s.anticomm);
}

Algebra recombine(const Algebra& a, const BilinearSplit& s) {
  std::vector<Vec> sc;
  for (std::size_t k = 0; k < s.comm.size(); ++k) sc.push_back(add(s.comm[k], s.anticomm[k]));
  return Algebra(a.name() + ".recombined", a.domain(), a.dim(), a.basis_labels(), std::move(sc));
}

Subspace ann2_module(const Algebra& a) {
  if (!a.domain().is_field())
    throw Error(Errc::NonFieldDomain, "ann(2) as a subspace requires a field; use the membership predicate");
  if (a.domain().characteristic() == 2) return Subspace::full(a.domain(), a.dim());
  return Subspace::zero(a.domain(), a.dim());
}

bool ann2_contains(const Vec& v) {
  for (const Scalar& s : v) {
    if (!(s + s).is_zero()) return false;
  }
  return true;
}

ScalingIsoReport scaling_iso_check(const Algebra& a) {
  if (a.domain().two_profile() != TwoProfile::TwoInvertible)
    throw Error(Errc::TwoNotInvertible, "2 is not invertible in " + a.domain().str());
  Scalar two = Scalar::of_int(a.domain(), 2);
  Scalar half = *two.try_invert();
  Algebra doubled = a.scaled_product(two, ".x2");
  ScalingIsoReport rep;
  rep.pass = true;
  // phi(x) = x/2 is linear and bijective; check phi(e_i e_j) = phi(e_i) *' phi(e_j).
  for (std::size_t i = 0; i < a.dim() && rep.pass; ++i)
    for (std::size_t j = 0; j < a.dim() && rep.pass; ++j) {
      Vec lhs = scale(half, a.basis_product(i, j));
      Vec rhs = doubled.mul(scale(half, unit_vec(a.domain(), a.dim(), i)),
                            scale(half, unit_vec(a.domain(), a.dim(), j)));
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.detail = "defect at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  return rep;
}

}  // namespace prealg
