#pragma once

#include <string>

#include "prealg/morphisms.hpp"

namespace prealg {

/// Parameters of the doubling M + M with product
/// (a,b)(a',b') = (aa' + mu bb', ab' + a'b); maps go to (phi, lambda phi).
struct DoublingParams {
  Scalar mu;
  Scalar lambda;
  /// mu (lambda^2 - 1) = 0, the compatibility constraint.
  bool constraint_holds() const;
  /// lambda^2 = 1.
  bool lambda_is_involutive() const;
};

/// Element of a doubled algebra, split into parities.
struct SuperElement {
  Vec even;
  Vec odd;
};

/// The Z2-graded double on basis (e_i, 0), (0, e_i); even labels keep the
/// parent label, odd labels get a prime suffix.
Algebra double_algebra(const Algebra& a, const DoublingParams& p);

/// The block map (a, b) -> (phi(a), lambda phi(b)) between doubles.
AlgebraMap double_map(const AlgebraMap& f, const DoublingParams& p);

SuperElement super_from_vec(const Algebra& parent, const Vec& doubled);
Vec vec_from_super(const Algebra& parent, const SuperElement& u);

/// Supercommutator computed from the definition: split into homogeneous
/// parts, apply xy - (-1)^{|x||y|} yx with products in the double, extend
/// bilinearly.
SuperElement supercommutator(const Algebra& parent, const DoublingParams& p, const SuperElement& u,
                             const SuperElement& v);

/// Closed form ([a,a'] + mu (b o b'), [a,b'] + [b,a']).
SuperElement supercommutator_closed(const Algebra& parent, const DoublingParams& p,
                                    const SuperElement& u, const SuperElement& v);

/// The algebra (M+M, [-,-]_s) on the doubled basis.
Algebra supercommutator_algebra(const Algebra& parent, const DoublingParams& p);

struct SuperGradingReport {
  bool graded = false;       // parity law on basis pairs
  bool closed_form_ok = false;  // definitional = closed form on a basis sweep
};

SuperGradingReport check_double_grading(const Algebra& parent, const DoublingParams& p);

struct DoublingEquivalenceReport {
  bool pre_lhs = false, pre_rhs = false, pre_agree = false;
  bool gen_lhs = false, gen_rhs = false, gen_agree = false;
  bool anti_lhs = false, anti_rhs = false, anti_agree = false;
  bool all_agree = false;
};

/// The doubled map is a pre-(generalized, anti-pre-) morphism iff the
/// original is; requires mu (lambda^2 - 1) = 0.
DoublingEquivalenceReport prop_doubling_equivalences(const AlgebraMap& f, const DoublingParams& p);

struct EpsilonReport {
  bool pass = false;
  std::string detail;
};

/// With mu = 1 and eps(x) = (x, x): [eps(x), eps(y)]_s = (2xy, 2[x,y]).
EpsilonReport epsilon_prop_check(const Algebra& a);

struct SuperMorphismReport {
  bool lhs = false;        // doubled map is a supercommutator-algebra morphism
  bool rhs = false;        // f is an algebra morphism
  bool via_bridge = false; // pre and generalized morphism
  bool pass = false;
};

/// For lambda^2 = 1 and a 2-torsion-free target: the doubled map respects
/// [-,-]_s iff f is an algebra morphism; also cross-checked through the
/// pre-and-generalized route.
SuperMorphismReport super_morphism_prop_check(const AlgebraMap& f, const DoublingParams& p);

/// In characteristic 2 the four doublings with mu, lambda = +-1 coincide,
/// on structure constants and on doubled maps.
bool doubling_collapse_check(const Algebra& a, const AlgebraMap& f);

}  // namespace prealg
