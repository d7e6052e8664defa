#pragma once

#include <optional>
#include <string>

#include "prealg/identities.hpp"
#include "prealg/substructures.hpp"

namespace prealg {

/// Linear map between algebras over a shared domain; the matrix columns
/// are the images of the source basis vectors.
struct AlgebraMap {
  Algebra source;
  Algebra target;
  Matrix matrix;  // target.dim x source.dim

  AlgebraMap(Algebra src, Algebra tgt, Matrix m);
  static AlgebraMap identity_on(const Algebra& a);
  static AlgebraMap zero_map(const Algebra& src, const Algebra& tgt);

  Vec apply(const Vec& x) const { return matrix.apply(x); }
  Vec apply_basis(std::size_t i) const { return matrix.column(i); }

  AlgebraMap negated() const;
  AlgebraMap compose(const AlgebraMap& inner) const;       // this after inner
  AlgebraMap star_compose(const AlgebraMap& inner) const;  // -(this after inner)
};

struct FlagReport {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// The five-way classification of a linear map.
struct MorphismProfile {
  FlagReport algebra_morphism;      // f(xy) = f(x)f(y)
  FlagReport anti_homomorphism;     // f(xy) = f(y)f(x)
  FlagReport pre_morphism;          // defect symmetric in (x, y)
  FlagReport generalized_morphism;  // defect antisymmetric in (x, y)
  FlagReport anti_pre_morphism;     // f(xy)+f(x)f(y) symmetric in (x, y)
};

MorphismProfile classify_map(const AlgebraMap& f);

/// The associative algebra End(M) of k-module endomorphisms under
/// composition, on the dim^2 matrix-unit basis (row-major index r*dim+c).
Algebra endomorphism_algebra(const Algebra& a);

/// x -> (matrix of left multiplication by x), as a map into End(M).
AlgebraMap lambda_map(const Algebra& a);

struct LambdaCriterionReport {
  bool pre_side_identity = false;   // the algebra satisfies the 3-variable identity
  bool pre_side_map = false;        // lambda is a pre-morphism
  bool pre_agree = false;
  bool anti_side_identity = false;  // is_anti_pre_lie
  bool anti_side_map = false;       // lie-admissible and lambda anti-pre
  bool anti_agree = false;
};

/// Dual-path evaluation of the two lambda criteria.
LambdaCriterionReport lambda_criteria(const Algebra& a);

struct BridgeReport {
  bool pass = false;
  bool lhs = false;  // pre and generalized
  bool rhs = false;  // algebra morphism
};

/// pre and generalized <=> morphism, over 2-torsion-free targets.
BridgeReport torsionfree_bridge(const AlgebraMap& f);

struct DerivationReport {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

DerivationReport is_derivation(const Algebra& a, const Matrix& d);
DerivationReport is_pre_derivation(const Algebra& a, const Matrix& d);

/// A derivation d with f(xy) = f(x)y + x d(y) on all pairs, if one exists.
std::optional<Matrix> find_generalized_derivation_witness(const Algebra& a, const Matrix& f);

struct IsoTheoremReport {
  bool pass = false;
  std::string detail;
  std::size_t quotient_dim = 0;
};

/// ker f is a pre-ideal, im f a pre-subalgebra, and the induced map is an
/// isomorphism of commutator algebras (M/ker f, [-,-]) -> (f(M), [-,-]).
IsoTheoremReport first_iso_theorem(const AlgebraMap& f);

/// N/(N cap K) = (N+K)/K as commutator algebras, for a pre-subalgebra N
/// and pre-ideal K.
IsoTheoremReport second_iso_theorem(const Algebra& a, const Subspace& n, const Subspace& k);

}  // namespace prealg
