#include "prealg/linear.hpp"

#include <algorithm>

namespace prealg {

namespace {

void require_field(const CoeffDomain& d, const char* what) {
  if (!d.is_field())
    throw Error(Errc::NonFieldDomain, std::string(what) + " requires a field domain, got " + d.str());
}

void require_same_domain(const CoeffDomain& a, const CoeffDomain& b) {
  if (a != b) throw Error(Errc::DomainMismatch, "domains differ: " + a.str() + " vs " + b.str());
}

}  // namespace

Vec zero_vec(const CoeffDomain& d, std::size_t n) { return Vec(n, Scalar::zero(d)); }

Vec unit_vec(const CoeffDomain& d, std::size_t n, std::size_t i) {
  Vec v = zero_vec(d, n);
  v[i] = Scalar::one(d);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec neg(const Vec& a) {
  Vec r = a;
  for (auto& s : r) s = -s;
  return r;
}

Vec scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& s : r) s = c * s;
  return r;
}

Matrix::Matrix(const CoeffDomain& d, std::size_t rows, std::size_t cols)
    : dom_(d), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(d)) {}

Matrix Matrix::identity(const CoeffDomain& d, std::size_t n) {
  Matrix m(d, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(d);
  return m;
}

Matrix Matrix::from_rows(const CoeffDomain& d, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(d, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::ShapeMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const CoeffDomain& d, const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(d, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(Errc::ShapeMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_domain(dom_, o.dom_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "matrix shapes differ");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_domain(dom_, o.dom_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "matrix shapes differ");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_domain(dom_, o.dom_);
  if (cols_ != o.rows_) throw Error(Errc::ShapeMismatch, "matrix product shape mismatch");
  Matrix m(dom_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& ark = at(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += ark * o.at(k, c);
    }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& s : m.a_) s = c * s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(dom_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error(Errc::ShapeMismatch, "matrix-vector shape mismatch");
  Vec y = zero_vec(dom_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

bool Matrix::operator==(const Matrix& o) const {
  return dom_ == o.dom_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix rref(const Matrix& m) {
  require_field(m.domain(), "rref");
  Matrix w = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < w.cols() && pivot_row < w.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < w.rows() && w.at(sel, col).is_zero()) ++sel;
    if (sel == w.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w.at(sel, c), w.at(pivot_row, c));
    Scalar inv = *w.at(pivot_row, col).try_invert();
    for (std::size_t c = col; c < w.cols(); ++c) w.at(pivot_row, c) = inv * w.at(pivot_row, c);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (r == pivot_row || w.at(r, col).is_zero()) continue;
      Scalar f = w.at(r, col);
      for (std::size_t c = col; c < w.cols(); ++c) w.at(r, c) -= f * w.at(pivot_row, c);
    }
    ++pivot_row;
  }
  Matrix out(m.domain(), pivot_row, w.cols());
  for (std::size_t r = 0; r < pivot_row; ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) out.at(r, c) = w.at(r, c);
  return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  require_field(a.domain(), "solve");
  if (b.size() != a.rows()) throw Error(Errc::ShapeMismatch, "rhs length mismatch");
  Matrix aug(a.domain(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  Matrix red = rref(aug);
  Vec x = zero_vec(a.domain(), a.cols());
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::size_t lead = 0;
    while (lead <= a.cols() && red.at(r, lead).is_zero()) ++lead;
    if (lead == a.cols()) return std::nullopt;  // 0 = nonzero
    x[lead] = red.at(r, a.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  require_field(m.domain(), "inverse");
  if (m.rows() != m.cols()) throw Error(Errc::ShapeMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(m.domain(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.domain());
  }
  Matrix red = rref(aug);
  if (red.rows() != n) throw Error(Errc::ShapeMismatch, "matrix is singular");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!(red.at(r, c) == (r == c ? Scalar::one(m.domain()) : Scalar::zero(m.domain()))))
        throw Error(Errc::ShapeMismatch, "matrix is singular");
  Matrix inv(m.domain(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

Subspace Subspace::zero(const CoeffDomain& d, std::size_t ambient) {
  require_field(d, "Subspace");
  return Subspace(d, ambient);
}

Subspace Subspace::full(const CoeffDomain& d, std::size_t ambient) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vec(d, ambient, i));
  return span(d, ambient, gens);
}

Subspace Subspace::span(const CoeffDomain& d, std::size_t ambient, const std::vector<Vec>& gens) {
  require_field(d, "Subspace");
  Subspace s(d, ambient);
  if (gens.empty()) return s;
  Matrix red = rref(Matrix::from_rows(d, gens, ambient));
  for (std::size_t r = 0; r < red.rows(); ++r) {
    s.basis_.push_back(red.row(r));
    std::size_t lead = 0;
    while (red.at(r, lead).is_zero()) ++lead;
    s.pivots_.push_back(lead);
  }
  return s;
}

bool Subspace::contains(const Vec& v) const { return coordinates_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) throw Error(Errc::AmbientMismatch, "vector/ambient mismatch");
  Vec residual = v;
  Vec coords = zero_vec(dom_, rank());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = residual[pivots_[i]];
    if (c.is_zero()) continue;
    coords[i] = c;
    residual = sub(residual, scale(c, basis_[i]));
  }
  if (!is_zero_vec(residual)) return std::nullopt;
  return coords;
}

bool Subspace::operator==(const Subspace& o) const {
  return dom_ == o.dom_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
  Matrix red = rref(m);
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::size_t lead = 0;
    while (red.at(r, lead).is_zero()) ++lead;
    pivots.push_back(lead);
  }
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    Vec v = zero_vec(m.domain(), m.cols());
    v[c] = Scalar::one(m.domain());
    for (std::size_t r = 0; r < red.rows(); ++r) v[pivots[r]] = -red.at(r, c);
    gens.push_back(v);
  }
  return Subspace::span(m.domain(), m.cols(), gens);
}

Subspace image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.domain(), m.rows(), cols);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.domain() != v.domain()) throw Error(Errc::DomainMismatch, "subspace domains differ");
  if (u.ambient_dim() != v.ambient_dim()) throw Error(Errc::AmbientMismatch, "ambient dims differ");
  std::vector<Vec> gens = u.basis();
  gens.insert(gens.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.domain(), u.ambient_dim(), gens);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.domain() != v.domain()) throw Error(Errc::DomainMismatch, "subspace domains differ");
  if (u.ambient_dim() != v.ambient_dim()) throw Error(Errc::AmbientMismatch, "ambient dims differ");
  // Columns are the basis vectors of u followed by the negated basis of v;
  // kernel elements (alpha, beta) satisfy sum alpha_i u_i = sum beta_j v_j.
  std::size_t n = u.ambient_dim();
  std::vector<Vec> cols;
  for (const Vec& b : u.basis()) cols.push_back(b);
  for (const Vec& b : v.basis()) cols.push_back(neg(b));
  if (cols.empty()) return Subspace::zero(u.domain(), n);
  Matrix m = Matrix::from_columns(u.domain(), cols, n);
  Subspace ker = kernel(m);
  std::vector<Vec> gens;
  for (const Vec& coeff : ker.basis()) {
    Vec w = zero_vec(u.domain(), n);
    for (std::size_t i = 0; i < u.rank(); ++i) w = add(w, scale(coeff[i], u.basis()[i]));
    gens.push_back(w);
  }
  return Subspace::span(u.domain(), n, gens);
}

Subspace complement(const Subspace& u) {
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < u.ambient_dim(); ++c) {
    if (std::find(u.pivots().begin(), u.pivots().end(), c) == u.pivots().end())
      gens.push_back(unit_vec(u.domain(), u.ambient_dim(), c));
  }
  return Subspace::span(u.domain(), u.ambient_dim(), gens);
}

namespace {

// Rank-r RREF matrices are parametrized by pivot-column sets and free
// entries; enumerating them yields each subspace exactly once.
void emit_subspaces_of_rank(const CoeffDomain& d, std::size_t n, std::size_t r,
                            std::vector<Subspace>& out) {
  std::vector<std::size_t> pivots(r);
  for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
  auto advance_pivots = [&]() -> bool {
    // next combination in lexicographic order
    std::size_t i = r;
    while (i-- > 0) {
      if (pivots[i] + (r - i) < n) {
        ++pivots[i];
        for (std::size_t j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  std::int64_t p = d.modulus();
  do {
    // free positions: (row i, col c) with c > pivots[i] and c not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = pivots[i] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_pos.emplace_back(i, c);
    std::vector<std::int64_t> digits(free_pos.size(), 0);
    while (true) {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < r; ++i) rows.push_back(unit_vec(d, n, pivots[i]));
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        rows[free_pos[k].first][free_pos[k].second] = Scalar::of_int(d, digits[k]);
      Subspace s = Subspace::span(d, n, rows);
      out.push_back(std::move(s));
      std::size_t k = digits.size();
      while (k-- > 0) {
        if (++digits[k] < p) break;
        digits[k] = 0;
        if (k == 0) goto done_rank;
      }
      if (digits.empty()) break;
    }
  done_rank:;
  } while (advance_pivots());
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const CoeffDomain& d, std::size_t n, std::size_t budget) {
  if (d.kind() != DomainKind::PrimeField)
    throw Error(Errc::NonFieldDomain, "subspace enumeration requires a prime field");
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(d.modulus());
  if (total > static_cast<double>(budget))
    throw Error(Errc::BudgetExceeded, "p^n exceeds enumeration budget");
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(d, n));
  for (std::size_t r = 1; r <= n; ++r) emit_subspaces_of_rank(d, n, r, out);
  return out;
}

std::vector<Vec> enumerate_vectors(const CoeffDomain& d, std::size_t n, std::size_t budget) {
  if (d.kind() != DomainKind::PrimeField)
    throw Error(Errc::NonFieldDomain, "vector enumeration requires a prime field");
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(d.modulus());
  if (total > static_cast<double>(budget))
    throw Error(Errc::BudgetExceeded, "p^n exceeds enumeration budget");
  std::vector<Vec> out;
  std::vector<std::int64_t> digits(n, 0);
  std::int64_t p = d.modulus();
  while (true) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::of_int(d, digits[i]));
    out.push_back(std::move(v));
    std::size_t k = n;
    while (k-- > 0) {
      if (++digits[k] < p) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace prealg
