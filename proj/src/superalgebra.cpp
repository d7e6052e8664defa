#include "prealg/superalgebra.hpp"

namespace prealg {

bool DoublingParams::constraint_holds() const {
  Scalar one = Scalar::one(mu.domain());
  return (mu * (lambda * lambda - one)).is_zero();
}

bool DoublingParams::lambda_is_involutive() const {
  return lambda * lambda == Scalar::one(lambda.domain());
}

Algebra double_algebra(const Algebra& a, const DoublingParams& p) {
  if (p.mu.domain() != a.domain() || p.lambda.domain() != a.domain())
    throw Error(Errc::DomainMismatch, "doubling parameters must live in the algebra domain");
  std::size_t n = a.dim();
  const CoeffDomain& d = a.domain();
  std::vector<std::string> labels;
  for (const auto& l : a.basis_labels()) labels.push_back(l);
  for (const auto& l : a.basis_labels()) labels.push_back(l + "'");
  auto embed = [&](const Vec& v, bool odd) {
    Vec w = zero_vec(d, 2 * n);
    for (std::size_t i = 0; i < n; ++i) w[(odd ? n : 0) + i] = v[i];
    return w;
  };
  std::vector<Vec> sc(4 * n * n, zero_vec(d, 2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& prod = a.basis_product(i, j);
      // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
      sc[i * 2 * n + j] = embed(prod, false);
      // (e_i, 0)(0, e_j) = (0, e_i e_j)
      sc[i * 2 * n + (n + j)] = embed(prod, true);
      // (0, e_i)(e_j, 0) = (0, e_i e_j): the odd cross terms keep the
      // factor order, which is what makes the supercommutator close to
      // ([a,a'] + mu (b o b'), [a,b'] + [b,a']).
      sc[(n + i) * 2 * n + j] = embed(prod, true);
      // (0, e_i)(0, e_j) = (mu e_i e_j, 0)
      sc[(n + i) * 2 * n + (n + j)] = embed(scale(p.mu, prod), false);
    }
  return Algebra(a.name() + ".double", d, 2 * n, labels, std::move(sc));
}

AlgebraMap double_map(const AlgebraMap& f, const DoublingParams& p) {
  if (p.mu.domain() != f.source.domain())
    throw Error(Errc::DomainMismatch, "doubling parameters must live in the map domain");
  Algebra dsrc = double_algebra(f.source, p);
  Algebra dtgt = double_algebra(f.target, p);
  std::size_t sn = f.source.dim(), tn = f.target.dim();
  Matrix m(f.source.domain(), 2 * tn, 2 * sn);
  for (std::size_t r = 0; r < tn; ++r)
    for (std::size_t c = 0; c < sn; ++c) {
      m.at(r, c) = f.matrix.at(r, c);
      m.at(tn + r, sn + c) = p.lambda * f.matrix.at(r, c);
    }
  return AlgebraMap(std::move(dsrc), std::move(dtgt), std::move(m));
}

SuperElement super_from_vec(const Algebra& parent, const Vec& doubled) {
  std::size_t n = parent.dim();
  if (doubled.size() != 2 * n) throw Error(Errc::DimensionMismatch, "doubled vector length");
  SuperElement u;
  u.even.assign(doubled.begin(), doubled.begin() + n);
  u.odd.assign(doubled.begin() + n, doubled.end());
  return u;
}

Vec vec_from_super(const Algebra& parent, const SuperElement& u) {
  std::size_t n = parent.dim();
  if (u.even.size() != n || u.odd.size() != n)
    throw Error(Errc::DimensionMismatch, "super element part length");
  Vec w = u.even;
  w.insert(w.end(), u.odd.begin(), u.odd.end());
  return w;
}

SuperElement supercommutator(const Algebra& parent, const DoublingParams& p, const SuperElement& u,
                             const SuperElement& v) {
  Algebra dbl = double_algebra(parent, p);
  std::size_t n = parent.dim();
  const CoeffDomain& d = parent.domain();
  auto embed = [&](const Vec& part, bool odd) {
    Vec w = zero_vec(d, 2 * n);
    for (std::size_t i = 0; i < n; ++i) w[(odd ? n : 0) + i] = part[i];
    return w;
  };
  Vec acc = zero_vec(d, 2 * n);
  for (int pu = 0; pu < 2; ++pu)
    for (int pv = 0; pv < 2; ++pv) {
      Vec x = embed(pu ? u.odd : u.even, pu);
      Vec y = embed(pv ? v.odd : v.even, pv);
      Vec xy = dbl.mul(x, y);
      Vec yx = dbl.mul(y, x);
      // xy - (-1)^{|x||y|} yx
      acc = add(acc, (pu == 1 && pv == 1) ? add(xy, yx) : sub(xy, yx));
    }
  return super_from_vec(parent, acc);
}

SuperElement supercommutator_closed(const Algebra& parent, const DoublingParams& p,
                                    const SuperElement& u, const SuperElement& v) {
  SuperElement r;
  r.even = add(parent.bracket(u.even, v.even), scale(p.mu, parent.circle(u.odd, v.odd)));
  r.odd = add(parent.bracket(u.even, v.odd), parent.bracket(u.odd, v.even));
  return r;
}

Algebra supercommutator_algebra(const Algebra& parent, const DoublingParams& p) {
  std::size_t n = parent.dim();
  const CoeffDomain& d = parent.domain();
  std::vector<std::string> labels;
  for (const auto& l : parent.basis_labels()) labels.push_back(l);
  for (const auto& l : parent.basis_labels()) labels.push_back(l + "'");
  std::vector<Vec> sc(4 * n * n, zero_vec(d, 2 * n));
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      SuperElement u{i < n ? unit_vec(d, n, i) : zero_vec(d, n),
                     i < n ? zero_vec(d, n) : unit_vec(d, n, i - n)};
      SuperElement v{j < n ? unit_vec(d, n, j) : zero_vec(d, n),
                     j < n ? zero_vec(d, n) : unit_vec(d, n, j - n)};
      sc[i * 2 * n + j] = vec_from_super(parent, supercommutator_closed(parent, p, u, v));
    }
  return Algebra(parent.name() + ".super", d, 2 * n, labels, std::move(sc));
}

SuperGradingReport check_double_grading(const Algebra& parent, const DoublingParams& p) {
  SuperGradingReport rep;
  Algebra dbl = double_algebra(parent, p);
  std::size_t n = parent.dim();
  rep.graded = true;
  for (std::size_t i = 0; i < 2 * n && rep.graded; ++i)
    for (std::size_t j = 0; j < 2 * n && rep.graded; ++j) {
      const Vec& prod = dbl.basis_product(i, j);
      bool even_inputs = (i < n) == (j < n);
      // even product lives in the first block, odd product in the second
      for (std::size_t k = 0; k < 2 * n; ++k) {
        bool even_slot = k < n;
        if (even_slot != even_inputs && !prod[k].is_zero()) rep.graded = false;
      }
    }
  rep.closed_form_ok = true;
  for (std::size_t i = 0; i < 2 * n && rep.closed_form_ok; ++i)
    for (std::size_t j = 0; j < 2 * n && rep.closed_form_ok; ++j) {
      const CoeffDomain& d = parent.domain();
      SuperElement u{i < n ? unit_vec(d, n, i) : zero_vec(d, n),
                     i < n ? zero_vec(d, n) : unit_vec(d, n, i - n)};
      SuperElement v{j < n ? unit_vec(d, n, j) : zero_vec(d, n),
                     j < n ? zero_vec(d, n) : unit_vec(d, n, j - n)};
      SuperElement def = supercommutator(parent, p, u, v);
      SuperElement closed = supercommutator_closed(parent, p, u, v);
      if (!(def.even == closed.even) || !(def.odd == closed.odd)) rep.closed_form_ok = false;
    }
  return rep;
}

DoublingEquivalenceReport prop_doubling_equivalences(const AlgebraMap& f, const DoublingParams& p) {
  if (!p.constraint_holds())
    throw Error(Errc::ParamConstraintViolated, "mu (lambda^2 - 1) must vanish");
  MorphismProfile base = classify_map(f);
  MorphismProfile dbl = classify_map(double_map(f, p));
  DoublingEquivalenceReport rep;
  rep.pre_lhs = dbl.pre_morphism.holds;
  rep.pre_rhs = base.pre_morphism.holds;
  rep.pre_agree = rep.pre_lhs == rep.pre_rhs;
  rep.gen_lhs = dbl.generalized_morphism.holds;
  rep.gen_rhs = base.generalized_morphism.holds;
  rep.gen_agree = rep.gen_lhs == rep.gen_rhs;
  rep.anti_lhs = dbl.anti_pre_morphism.holds;
  rep.anti_rhs = base.anti_pre_morphism.holds;
  rep.anti_agree = rep.anti_lhs == rep.anti_rhs;
  rep.all_agree = rep.pre_agree && rep.gen_agree && rep.anti_agree;
  return rep;
}

EpsilonReport epsilon_prop_check(const Algebra& a) {
  DoublingParams p{Scalar::one(a.domain()), Scalar::one(a.domain())};
  EpsilonReport rep;
  rep.pass = true;
  Scalar two = Scalar::of_int(a.domain(), 2);
  for (std::size_t i = 0; i < a.dim() && rep.pass; ++i)
    for (std::size_t j = 0; j < a.dim() && rep.pass; ++j) {
      Vec x = unit_vec(a.domain(), a.dim(), i), y = unit_vec(a.domain(), a.dim(), j);
      SuperElement ex{x, x}, ey{y, y};
      SuperElement got = supercommutator(a, p, ex, ey);
      Vec want_even = scale(two, a.basis_product(i, j));
      Vec want_odd = scale(two, a.bracket_basis(i, j));
      if (!(got.even == want_even) || !(got.odd == want_odd)) {
        rep.pass = false;
        rep.detail = "defect at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  return rep;
}

SuperMorphismReport super_morphism_prop_check(const AlgebraMap& f, const DoublingParams& p) {
  if (!p.lambda_is_involutive())
    throw Error(Errc::ParamConstraintViolated, "lambda^2 must equal 1");
  TwoProfile tp = f.target.domain().two_profile();
  if (tp == TwoProfile::CharacteristicTwo || tp == TwoProfile::TwoTorsion)
    throw Error(Errc::TwoTorsionTarget, "target domain has 2-torsion");
  SuperMorphismReport rep;
  Algebra ssrc = supercommutator_algebra(f.source, p);
  Algebra stgt = supercommutator_algebra(f.target, p);
  AlgebraMap dbl = double_map(f, p);
  AlgebraMap smap(ssrc, stgt, dbl.matrix);
  rep.lhs = classify_map(smap).algebra_morphism.holds;
  MorphismProfile base = classify_map(f);
  rep.rhs = base.algebra_morphism.holds;
  rep.via_bridge = base.pre_morphism.holds && base.generalized_morphism.holds;
  rep.pass = (rep.lhs == rep.rhs) && (rep.via_bridge == rep.rhs);
  return rep;
}

bool doubling_collapse_check(const Algebra& a, const AlgebraMap& f) {
  Scalar one = Scalar::one(a.domain());
  Scalar minus = -one;
  bool objects_equal = true, maps_equal = true;
  Algebra ref = double_algebra(a, {one, one});
  AlgebraMap ref_map = double_map(f, {one, one});
  for (const Scalar& mu : {one, minus})
    for (const Scalar& lambda : {one, minus}) {
      DoublingParams p{mu, lambda};
      if (!(double_algebra(a, p) == ref)) objects_equal = false;
      if (!(double_map(f, p).matrix == ref_map.matrix)) maps_equal = false;
    }
  return objects_equal && maps_equal;
}

}  // namespace prealg
