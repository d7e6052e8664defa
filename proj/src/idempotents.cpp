#include "prealg/idempotents.hpp"

#include <algorithm>

namespace prealg {

const char* idempotent_kind_name(IdempotentKind k) {
  switch (k) {
    case IdempotentKind::PreMorphism: return "pre";
    case IdempotentKind::GeneralizedMorphism: return "generalized";
    case IdempotentKind::AntiPreMorphism: return "anti-pre";
  }
  return "?";
}

namespace {

void require_two_torsion_free(const CoeffDomain& d) {
  TwoProfile tp = d.two_profile();
  if (tp == TwoProfile::CharacteristicTwo || tp == TwoProfile::TwoTorsion)
    throw Error(Errc::TwoTorsionDomain,
                "the anti-pre kind requires a 2-torsion-free domain, got " + d.str());
}

Vec endo_defect(const Algebra& a, const Matrix& e, std::size_t i, std::size_t j) {
  return sub(e.apply(a.basis_product(i, j)), a.mul(e.column(i), e.column(j)));
}

}  // namespace

IdempotentReport is_idempotent_endo(const Algebra& a, const Matrix& e, IdempotentKind kind) {
  if (e.rows() != a.dim() || e.cols() != a.dim())
    throw Error(Errc::ShapeMismatch, "endomorphism matrix must be dim x dim");
  if (e.domain() != a.domain()) throw Error(Errc::DomainMismatch, "matrix domain differs");
  if (kind == IdempotentKind::AntiPreMorphism) require_two_torsion_free(a.domain());
  IdempotentReport rep;
  rep.idempotent = (e * e == e);
  rep.condition = true;
  for (std::size_t i = 0; i < a.dim() && rep.condition; ++i)
    for (std::size_t j = 0; j < a.dim() && rep.condition; ++j) {
      Vec residual;
      switch (kind) {
        case IdempotentKind::PreMorphism:
          residual = sub(endo_defect(a, e, i, j), endo_defect(a, e, j, i));
          break;
        case IdempotentKind::GeneralizedMorphism:
          residual = add(endo_defect(a, e, i, j), endo_defect(a, e, j, i));
          break;
        case IdempotentKind::AntiPreMorphism: {
          Vec lhs = add(e.apply(a.basis_product(i, j)), a.mul(e.column(i), e.column(j)));
          Vec rhs = add(e.apply(a.basis_product(j, i)), a.mul(e.column(j), e.column(i)));
          residual = sub(lhs, rhs);
          break;
        }
      }
      if (!is_zero_vec(residual)) {
        rep.condition = false;
        rep.witness = {i, j};
      }
    }
  rep.holds = rep.idempotent && rep.condition;
  return rep;
}

bool pair_is_valid(const Algebra& a, const Subspace& k, const Subspace& b, IdempotentKind kind) {
  if (k.ambient_dim() != a.dim() || b.ambient_dim() != a.dim()) return false;
  if (k.rank() + b.rank() != a.dim()) return false;
  if (subspace_intersect(k, b).rank() != 0) return false;
  switch (kind) {
    case IdempotentKind::PreMorphism:
      return is_substructure(a, k, SubstructureKind::PreIdeal).holds &&
             is_substructure(a, b, SubstructureKind::PreSubalgebra).holds;
    case IdempotentKind::GeneralizedMorphism:
      return is_substructure(a, k, SubstructureKind::GeneralizedIdeal).holds &&
             is_substructure(a, b, SubstructureKind::GeneralizedSubalgebra).holds;
    case IdempotentKind::AntiPreMorphism: {
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
          if (!k.contains(a.bracket_basis(i, j))) return false;
      for (const Vec& u : b.basis())
        for (const Vec& v : b.basis())
          if (!(a.mul(u, v) == a.mul(v, u))) return false;
      return true;
    }
  }
  return false;
}

DecompositionPair pair_from_idempotent(const Algebra& a, const Matrix& e, IdempotentKind kind) {
  if (!a.domain().is_field()) throw Error(Errc::NonFieldDomain, "pair extraction requires a field");
  IdempotentReport rep = is_idempotent_endo(a, e, kind);
  if (!rep.holds)
    throw Error(Errc::NotIdempotentOfKind,
                std::string("matrix is not an idempotent ") + idempotent_kind_name(kind) +
                    (rep.idempotent ? " (condition fails)" : " (not idempotent)"));
  DecompositionPair p{kernel(e), image(e), kind};
  if (!pair_is_valid(a, p.k_part, p.b_part, kind))
    throw Error(Errc::Internal, "extracted pair violates its structural invariants");
  return p;
}

Matrix idempotent_from_pair(const DecompositionPair& p, const Algebra& a) {
  if (!pair_is_valid(a, p.k_part, p.b_part, p.kind))
    throw Error(Errc::InvalidPair, "pair fails the direct-sum or substructure conditions");
  std::size_t n = a.dim();
  // basis-change matrix: columns are K basis then B basis
  std::vector<Vec> cols;
  for (const Vec& v : p.k_part.basis()) cols.push_back(v);
  for (const Vec& v : p.b_part.basis()) cols.push_back(v);
  Matrix t = Matrix::from_columns(a.domain(), cols, n);
  Matrix tinv = inverse(t);
  // projector = T diag(0, I) T^{-1}
  Matrix mid(a.domain(), n, n);
  for (std::size_t i = p.k_part.rank(); i < n; ++i) mid.at(i, i) = Scalar::one(a.domain());
  Matrix e = t * mid * tinv;
  IdempotentReport rep = is_idempotent_endo(a, e, p.kind);
  if (!rep.holds) throw Error(Errc::Internal, "constructed projector fails the kind condition");
  return e;
}

std::vector<Matrix> enumerate_matrices(const CoeffDomain& d, std::size_t rows, std::size_t cols,
                                       std::size_t budget) {
  if (d.kind() != DomainKind::PrimeField)
    throw Error(Errc::NonFieldDomain, "matrix enumeration requires a prime field");
  double total = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    total *= static_cast<double>(d.modulus());
    if (total > static_cast<double>(budget))
      throw Error(Errc::BudgetExceeded, "p^(rows*cols) exceeds enumeration budget");
  }
  std::vector<Matrix> out;
  std::vector<std::int64_t> digits(rows * cols, 0);
  std::int64_t p = d.modulus();
  while (true) {
    Matrix m(d, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar::of_int(d, digits[r * cols + c]);
    out.push_back(std::move(m));
    std::size_t k = digits.size();
    while (k-- > 0) {
      if (++digits[k] < p) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
    if (digits.empty()) return out;
  }
}

namespace {

std::vector<DecompositionPair> enumerate_pairs(const Algebra& a, IdempotentKind kind,
                                               std::size_t budget) {
  std::vector<Subspace> subs = enumerate_subspaces(a.domain(), a.dim(), budget);
  std::vector<DecompositionPair> out;
  for (const Subspace& k : subs)
    for (const Subspace& b : subs)
      if (pair_is_valid(a, k, b, kind)) out.push_back({k, b, kind});
  return out;
}

bool same_pair(const DecompositionPair& x, const DecompositionPair& y) {
  return x.k_part == y.k_part && x.b_part == y.b_part;
}

}  // namespace

RoundtripReport roundtrip_check(const Algebra& a, IdempotentKind kind, std::size_t budget) {
  if (a.domain().kind() != DomainKind::PrimeField)
    throw Error(Errc::NonFieldDomain, "roundtrip check requires a prime field");
  if (kind == IdempotentKind::AntiPreMorphism) require_two_torsion_free(a.domain());
  RoundtripReport rep;
  double matrix_count = 1;
  bool matrix_side = true;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
    matrix_count *= static_cast<double>(a.domain().modulus());
    if (matrix_count > static_cast<double>(budget)) {
      matrix_side = false;
      break;
    }
  }
  std::vector<DecompositionPair> pairs = enumerate_pairs(a, kind, budget);
  rep.p_count = pairs.size();
  std::vector<Matrix> idempotents;
  if (matrix_side) {
    rep.mode = "matrix";
    for (Matrix& e : enumerate_matrices(a.domain(), a.dim(), a.dim(), budget)) {
      if (is_idempotent_endo(a, e, kind).holds) idempotents.push_back(std::move(e));
    }
  } else {
    rep.mode = "pair";
    for (const DecompositionPair& p : pairs) idempotents.push_back(idempotent_from_pair(p, a));
    std::sort(idempotents.begin(), idempotents.end(), [](const Matrix& x, const Matrix& y) {
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) {
          int cm = x.at(r, c).cmp(y.at(r, c));
          if (cm != 0) return cm < 0;
        }
      return false;
    });
  }
  rep.e_count = idempotents.size();
  rep.counts_match = rep.e_count == rep.p_count;

  rep.pair_of_idempotent_in_p = true;
  rep.idempotent_of_pair_in_e = true;
  rep.composites_identity = true;
  for (const Matrix& e : idempotents) {
    DecompositionPair p = pair_from_idempotent(a, e, kind);
    bool found = std::any_of(pairs.begin(), pairs.end(),
                             [&](const DecompositionPair& q) { return same_pair(p, q); });
    if (!found) rep.pair_of_idempotent_in_p = false;
    if (!(idempotent_from_pair(p, a) == e)) rep.composites_identity = false;
  }
  for (const DecompositionPair& p : pairs) {
    Matrix e = idempotent_from_pair(p, a);
    bool found = std::any_of(idempotents.begin(), idempotents.end(),
                             [&](const Matrix& m) { return m == e; });
    if (!found) rep.idempotent_of_pair_in_e = false;
    DecompositionPair back = pair_from_idempotent(a, e, kind);
    if (!same_pair(back, p)) rep.composites_identity = false;
  }
  rep.pass = rep.counts_match && rep.pair_of_idempotent_in_p && rep.idempotent_of_pair_in_e &&
             rep.composites_identity;
  return rep;
}

AntiPreClassificationReport anti_pre_classification_check(const Algebra& a, std::size_t budget) {
  require_two_torsion_free(a.domain());
  AntiPreClassificationReport rep;
  rep.agree = true;
  for (const Matrix& e : enumerate_matrices(a.domain(), a.dim(), a.dim(), budget)) {
    ++rep.checked;
    bool definitional = is_idempotent_endo(a, e, IdempotentKind::AntiPreMorphism).holds;
    bool characterized = (e * e == e);
    if (characterized) {
      for (std::size_t i = 0; i < a.dim() && characterized; ++i)
        for (std::size_t j = 0; j < a.dim() && characterized; ++j)
          if (!is_zero_vec(e.apply(a.bracket_basis(i, j)))) characterized = false;
    }
    if (characterized) {
      for (std::size_t i = 0; i < a.dim() && characterized; ++i)
        for (std::size_t j = 0; j < a.dim() && characterized; ++j)
          if (!(a.mul(e.column(i), e.column(j)) == a.mul(e.column(j), e.column(i))))
            characterized = false;
    }
    if (definitional != characterized) rep.agree = false;
    if (definitional) ++rep.census;
  }
  return rep;
}

}  // namespace prealg
