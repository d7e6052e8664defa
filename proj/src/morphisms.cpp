#include "prealg/morphisms.hpp"

namespace prealg {

AlgebraMap::AlgebraMap(Algebra src, Algebra tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (source.domain() != target.domain())
    throw Error(Errc::DomainMismatch, "map endpoints over different domains");
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw Error(Errc::ShapeMismatch, "map matrix must be target.dim x source.dim");
  if (matrix.domain() != source.domain())
    throw Error(Errc::DomainMismatch, "map matrix domain differs");
}

AlgebraMap AlgebraMap::identity_on(const Algebra& a) {
  return AlgebraMap(a, a, Matrix::identity(a.domain(), a.dim()));
}

AlgebraMap AlgebraMap::zero_map(const Algebra& src, const Algebra& tgt) {
  return AlgebraMap(src, tgt, Matrix(src.domain(), tgt.dim(), src.dim()));
}

AlgebraMap AlgebraMap::negated() const {
  return AlgebraMap(source, target, matrix.scaled(-Scalar::one(matrix.domain())));
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& inner) const {
  if (!(inner.target == source))
    throw Error(Errc::ShapeMismatch, "composition endpoints do not match");
  return AlgebraMap(inner.source, target, matrix * inner.matrix);
}

AlgebraMap AlgebraMap::star_compose(const AlgebraMap& inner) const {
  return compose(inner).negated();
}

namespace {

// defect(i, j) = f(e_i e_j) - f(e_i) f(e_j), products in the target.
Vec morphism_defect(const AlgebraMap& f, std::size_t i, std::size_t j) {
  return sub(f.apply(f.source.basis_product(i, j)),
             f.target.mul(f.apply_basis(i), f.apply_basis(j)));
}

FlagReport sweep_flag(const AlgebraMap& f,
                      Vec (*residual)(const AlgebraMap&, std::size_t, std::size_t)) {
  FlagReport rep;
  rep.holds = true;
  for (std::size_t i = 0; i < f.source.dim(); ++i)
    for (std::size_t j = 0; j < f.source.dim(); ++j) {
      if (!is_zero_vec(residual(f, i, j))) {
        rep.holds = false;
        rep.witness = {i, j};
        return rep;
      }
    }
  return rep;
}

}  // namespace

MorphismProfile classify_map(const AlgebraMap& f) {
  MorphismProfile p;
  p.algebra_morphism = sweep_flag(f, [](const AlgebraMap& f, std::size_t i, std::size_t j) {
    return morphism_defect(f, i, j);
  });
  p.anti_homomorphism = sweep_flag(f, [](const AlgebraMap& f, std::size_t i, std::size_t j) {
    return sub(f.apply(f.source.basis_product(i, j)),
               f.target.mul(f.apply_basis(j), f.apply_basis(i)));
  });
  p.pre_morphism = sweep_flag(f, [](const AlgebraMap& f, std::size_t i, std::size_t j) {
    return sub(morphism_defect(f, i, j), morphism_defect(f, j, i));
  });
  p.generalized_morphism = sweep_flag(f, [](const AlgebraMap& f, std::size_t i, std::size_t j) {
    return add(morphism_defect(f, i, j), morphism_defect(f, j, i));
  });
  p.anti_pre_morphism = sweep_flag(f, [](const AlgebraMap& f, std::size_t i, std::size_t j) {
    Vec lhs = add(f.apply(f.source.basis_product(i, j)),
                  f.target.mul(f.apply_basis(i), f.apply_basis(j)));
    Vec rhs = add(f.apply(f.source.basis_product(j, i)),
                  f.target.mul(f.apply_basis(j), f.apply_basis(i)));
    return sub(lhs, rhs);
  });
  return p;
}

Algebra endomorphism_algebra(const Algebra& a) {
  std::size_t n = a.dim();
  std::size_t n2 = n * n;
  const CoeffDomain& d = a.domain();
  std::vector<std::string> labels;
  labels.reserve(n2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
  // E_{rc} E_{r'c'} = delta_{c r'} E_{r c'} under composition.
  std::vector<Vec> sc(n2 * n2, zero_vec(d, n2));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r2 = 0; r2 < n; ++r2)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          if (c != r2) continue;
          std::size_t i = r * n + c, j = r2 * n + c2;
          sc[i * n2 + j][r * n + c2] = Scalar::one(d);
        }
  return Algebra("End(" + a.name() + ")", d, n2, labels, std::move(sc));
}

AlgebraMap lambda_map(const Algebra& a) {
  Algebra end_alg = endomorphism_algebra(a);
  std::size_t n = a.dim();
  Matrix m(a.domain(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix li = a.left_mul_matrix(unit_vec(a.domain(), n, i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r * n + c, i) = li.at(r, c);
  }
  return AlgebraMap(a, end_alg, std::move(m));
}

LambdaCriterionReport lambda_criteria(const Algebra& a) {
  LambdaCriterionReport rep;
  MorphismProfile lam = classify_map(lambda_map(a));
  rep.pre_side_identity = is_pre_lie(a).holds;
  rep.pre_side_map = lam.pre_morphism.holds;
  rep.pre_agree = rep.pre_side_identity == rep.pre_side_map;
  rep.anti_side_identity = is_anti_pre_lie(a).holds;
  rep.anti_side_map = is_lie_admissible(a).holds && lam.anti_pre_morphism.holds;
  rep.anti_agree = rep.anti_side_identity == rep.anti_side_map;
  return rep;
}

BridgeReport torsionfree_bridge(const AlgebraMap& f) {
  TwoProfile tp = f.target.domain().two_profile();
  if (tp == TwoProfile::CharacteristicTwo || tp == TwoProfile::TwoTorsion)
    throw Error(Errc::TwoTorsionTarget, "target domain has 2-torsion");
  MorphismProfile p = classify_map(f);
  BridgeReport rep;
  rep.lhs = p.pre_morphism.holds && p.generalized_morphism.holds;
  rep.rhs = p.algebra_morphism.holds;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

DerivationReport is_derivation(const Algebra& a, const Matrix& d) {
  if (d.rows() != a.dim() || d.cols() != a.dim())
    throw Error(Errc::ShapeMismatch, "derivation matrix must be dim x dim");
  DerivationReport rep;
  rep.holds = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec ei = unit_vec(a.domain(), a.dim(), i), ej = unit_vec(a.domain(), a.dim(), j);
      Vec lhs = d.apply(a.basis_product(i, j));
      Vec rhs = add(a.mul(d.apply(ei), ej), a.mul(ei, d.apply(ej)));
      if (!(lhs == rhs)) {
        rep.holds = false;
        rep.witness = {i, j};
        return rep;
      }
    }
  return rep;
}

DerivationReport is_pre_derivation(const Algebra& a, const Matrix& d) {
  if (d.rows() != a.dim() || d.cols() != a.dim())
    throw Error(Errc::ShapeMismatch, "derivation matrix must be dim x dim");
  DerivationReport rep;
  rep.holds = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec ei = unit_vec(a.domain(), a.dim(), i), ej = unit_vec(a.domain(), a.dim(), j);
      Vec lhs = d.apply(a.bracket_basis(i, j));
      Vec rhs = add(a.bracket(d.apply(ei), ej), a.bracket(ei, d.apply(ej)));
      if (!(lhs == rhs)) {
        rep.holds = false;
        rep.witness = {i, j};
        return rep;
      }
    }
  return rep;
}

std::optional<Matrix> find_generalized_derivation_witness(const Algebra& a, const Matrix& f) {
  if (!a.domain().is_field()) throw Error(Errc::NonFieldDomain, "witness search requires a field");
  if (f.rows() != a.dim() || f.cols() != a.dim())
    throw Error(Errc::ShapeMismatch, "matrix must be dim x dim");
  std::size_t n = a.dim();
  std::size_t unknowns = n * n;  // D[u][v], column-of-v convention: D e_v = sum_u D[u][v] e_u
  std::vector<Vec> rows;
  Vec rhs_all;
  auto emit = [&](const Vec& coeffs, const Scalar& rhs) {
    rows.push_back(coeffs);
    rhs_all.push_back(rhs);
  };
  const CoeffDomain& d = a.domain();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix li = a.left_mul_matrix(unit_vec(d, n, i));
    Matrix ri = a.right_mul_matrix(unit_vec(d, n, i));
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lj = a.left_mul_matrix(unit_vec(d, n, j));
      Matrix rj = a.right_mul_matrix(unit_vec(d, n, j));
      const Vec& cij = a.basis_product(i, j);
      Vec fei = f.column(i);
      Vec f_of_prod = f.apply(cij);
      Vec fei_ej = a.mul(fei, unit_vec(d, n, j));
      for (std::size_t m = 0; m < n; ++m) {
        // relation: (e_i d(e_j))[m] = (f(e_i e_j) - f(e_i) e_j)[m]
        Vec coeffs = zero_vec(d, unknowns);
        for (std::size_t u = 0; u < n; ++u) coeffs[u * n + j] += li.at(m, u);
        emit(coeffs, f_of_prod[m] - fei_ej[m]);
        // derivation law: d(e_i e_j)[m] - (d(e_i) e_j)[m] - (e_i d(e_j))[m] = 0
        Vec dcoeffs = zero_vec(d, unknowns);
        for (std::size_t v = 0; v < n; ++v)
          if (!cij[v].is_zero()) dcoeffs[m * n + v] += cij[v];
        for (std::size_t u = 0; u < n; ++u) {
          dcoeffs[u * n + i] -= rj.at(m, u);
          dcoeffs[u * n + j] -= li.at(m, u);
        }
        emit(dcoeffs, Scalar::zero(d));
      }
    }
  }
  Matrix system = Matrix::from_rows(d, rows, unknowns);
  auto sol = solve(system, rhs_all);
  if (!sol) return std::nullopt;
  Matrix witness(d, n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) witness.at(u, v) = (*sol)[u * n + v];
  // re-check validity
  if (!is_derivation(a, witness).holds) throw Error(Errc::Internal, "solver returned a non-derivation");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ei = unit_vec(d, n, i), ej = unit_vec(d, n, j);
      Vec lhs = f.apply(a.basis_product(i, j));
      Vec rhs = add(a.mul(f.apply(ei), ej), a.mul(ei, witness.apply(ej)));
      if (!(lhs == rhs)) throw Error(Errc::Internal, "solver witness fails the defining relation");
    }
  return witness;
}

IsoTheoremReport first_iso_theorem(const AlgebraMap& f) {
  if (!f.source.domain().is_field())
    throw Error(Errc::NonFieldDomain, "iso theorems require a field domain");
  MorphismProfile p = classify_map(f);
  if (!p.pre_morphism.holds) throw Error(Errc::NotAPreMorphism, "map is not a pre-morphism");
  IsoTheoremReport rep;
  Subspace ker = kernel(f.matrix);
  Subspace img = image(f.matrix);
  if (!is_substructure(f.source, ker, SubstructureKind::PreIdeal).holds) {
    rep.detail = "kernel is not a pre-ideal";
    return rep;
  }
  if (!is_substructure(f.target, img, SubstructureKind::PreSubalgebra).holds) {
    rep.detail = "image is not a pre-subalgebra";
    return rep;
  }
  QuotientPresentation q = quotient(f.source, ker, ProductKind::Bracket);
  rep.quotient_dim = q.induced.dim();
  // induced map on section representatives
  std::size_t m = q.induced.dim();
  Matrix induced(f.source.domain(), f.target.dim(), m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec img_i = f.apply(q.section.basis()[i]);
    for (std::size_t r = 0; r < f.target.dim(); ++r) induced.at(r, i) = img_i[r];
  }
  if (image(induced).rank() != m) {
    rep.detail = "induced map is not injective";
    return rep;
  }
  if (!(image(induced) == img)) {
    rep.detail = "induced image differs from f(M)";
    return rep;
  }
  Algebra target_u = f.target.commutator_algebra();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec lhs = induced.apply(q.induced.basis_product(i, j));
      Vec rhs = target_u.mul(induced.column(i), induced.column(j));
      if (!(lhs == rhs)) {
        rep.detail = "induced map is not a commutator-algebra morphism";
        return rep;
      }
    }
  rep.pass = true;
  return rep;
}

IsoTheoremReport second_iso_theorem(const Algebra& a, const Subspace& n, const Subspace& k) {
  if (!is_substructure(a, n, SubstructureKind::PreSubalgebra).holds)
    throw Error(Errc::NotPreSubalgebra, "N is not a pre-subalgebra");
  if (!is_substructure(a, k, SubstructureKind::PreIdeal).holds)
    throw Error(Errc::NotPreIdeal, "K is not a pre-ideal");
  IsoTheoremReport rep;
  Algebra u = a.commutator_algebra();
  Subspace meet = subspace_intersect(n, k);
  Subspace join = subspace_sum(n, k);
  // Left side: N / (N cap K), built inside the commutator algebra of N.
  Algebra n_alg = restrict_to(u, n, ProductKind::Dot, "N");
  std::vector<Vec> meet_in_n;
  for (const Vec& v : meet.basis()) {
    auto coords = n.coordinates_of(v);
    if (!coords) throw Error(Errc::Internal, "intersection not inside N");
    meet_in_n.push_back(*coords);
  }
  QuotientPresentation left =
      quotient(n_alg, Subspace::span(a.domain(), n.rank(), meet_in_n), ProductKind::Dot);
  // Right side: (N + K) / K, built inside the commutator algebra of N + K.
  Algebra s_alg = restrict_to(u, join, ProductKind::Dot, "N+K");
  std::vector<Vec> k_in_s;
  for (const Vec& v : k.basis()) {
    auto coords = join.coordinates_of(v);
    if (!coords) throw Error(Errc::Internal, "K not inside N+K");
    k_in_s.push_back(*coords);
  }
  QuotientPresentation right =
      quotient(s_alg, Subspace::span(a.domain(), join.rank(), k_in_s), ProductKind::Dot);
  rep.quotient_dim = left.induced.dim();
  if (left.induced.dim() != right.induced.dim()) {
    rep.detail = "quotient dimensions differ";
    return rep;
  }
  std::size_t m = left.induced.dim();
  // canonical map: section rep of left (in N coords) -> ambient -> N+K coords -> project
  Matrix canon(a.domain(), m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec in_n = left.lift(unit_vec(a.domain(), m, i));  // coords in N basis
    Vec ambient = zero_vec(a.domain(), a.dim());
    for (std::size_t t = 0; t < n.rank(); ++t) ambient = add(ambient, scale(in_n[t], n.basis()[t]));
    auto in_join = join.coordinates_of(ambient);
    if (!in_join) throw Error(Errc::Internal, "N not inside N+K");
    Vec q = right.project(*in_join);
    for (std::size_t r = 0; r < m; ++r) canon.at(r, i) = q[r];
  }
  if (m > 0 && image(canon).rank() != m) {
    rep.detail = "canonical map is not bijective";
    return rep;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec lhs = canon.apply(left.induced.basis_product(i, j));
      Vec rhs = right.induced.mul(canon.column(i), canon.column(j));
      if (!(lhs == rhs)) {
        rep.detail = "canonical map is not an algebra morphism";
        return rep;
      }
    }
  rep.pass = true;
  return rep;
}

}  // namespace prealg
