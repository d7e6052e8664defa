#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prealg/domain.hpp"

namespace prealg {

/// Coordinate vector; all entries share one domain.
using Vec = std::vector<Scalar>;

Vec zero_vec(const CoeffDomain& d, std::size_t n);
Vec unit_vec(const CoeffDomain& d, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scale(const Scalar& c, const Vec& a);

/// Dense row-major matrix over a shared domain.
class Matrix {
 public:
  Matrix(const CoeffDomain& d, std::size_t rows, std::size_t cols);
  static Matrix identity(const CoeffDomain& d, std::size_t n);
  static Matrix from_rows(const CoeffDomain& d, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const CoeffDomain& d, const std::vector<Vec>& cols, std::size_t rows);

  const CoeffDomain& domain() const noexcept { return dom_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Vec apply(const Vec& x) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

 private:
  CoeffDomain dom_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Submodule of a field domain's coordinate space, stored as the canonical
/// reduced row-echelon basis (no zero rows, strictly increasing pivots).
/// Equal subspaces have identical representations.
class Subspace {
 public:
  static Subspace zero(const CoeffDomain& d, std::size_t ambient);
  static Subspace full(const CoeffDomain& d, std::size_t ambient);
  static Subspace span(const CoeffDomain& d, std::size_t ambient, const std::vector<Vec>& gens);

  const CoeffDomain& domain() const noexcept { return dom_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vec> coordinates_of(const Vec& v) const;

  bool operator==(const Subspace& o) const;

 private:
  Subspace(const CoeffDomain& d, std::size_t ambient) : dom_(d), ambient_(ambient) {}
  CoeffDomain dom_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row-echelon form; zero rows dropped. Field domains only.
Matrix rref(const Matrix& m);

/// One solution of a x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

Matrix inverse(const Matrix& m);  // throws ShapeMismatch if singular

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Deterministic complement spanned by standard vectors at non-pivot columns.
Subspace complement(const Subspace& u);

/// All subspaces of F_p^n, each exactly once, ordered by rank, then pivot
/// columns, then free entries. Requires p^n <= budget.
std::vector<Subspace> enumerate_subspaces(const CoeffDomain& d, std::size_t n,
                                          std::size_t budget = 4096);

/// All vectors of F_p^n in mixed-radix order (first coordinate most
/// significant). Requires p^n <= budget.
std::vector<Vec> enumerate_vectors(const CoeffDomain& d, std::size_t n,
                                   std::size_t budget = 4096);

constexpr std::size_t kDefaultBudget = 4096;

}  // namespace prealg
