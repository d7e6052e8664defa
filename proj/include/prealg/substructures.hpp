#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prealg/algebra.hpp"

namespace prealg {

enum class SubstructureKind {
  Ideal,                  // xi, ix in I for x in M, i in I
  PreIdeal,               // [x, i] in I
  GeneralizedIdeal,       // x o i in I
  Subalgebra,             // xy in B for x, y in B
  PreSubalgebra,          // [x, y] in B
  GeneralizedSubalgebra,  // x o y in B
};

const char* substructure_kind_name(SubstructureKind k);

enum class ProductKind { Dot, Bracket, Circle };

struct SubstructureReport {
  bool holds = false;
  // basis indices (ambient or internal) of the first failing product
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

SubstructureReport is_substructure(const Algebra& a, const Subspace& s, SubstructureKind kind);

/// Least subspace containing gens and closed per kind; iterated closure,
/// stabilizes in at most dim rounds.
Subspace generated_substructure(const Algebra& a, const std::vector<Vec>& gens, SubstructureKind kind);

/// Elements associating with everything in all three slots.
Subspace nucleus(const Algebra& a);
/// Nuclear elements commuting with everything.
Subspace center(const Algebra& a);

/// Smallest pre-ideal containing all brackets [i, j], i in I, j in J.
Subspace pre_ideal_commutator(const Algebra& a, const Subspace& i, const Subspace& j);

/// Ideal generated by all products ij and ji, i in I, j in J.
Subspace huq_smith_commutator(const Algebra& a, const Subspace& i, const Subspace& j);

/// Quotient of a by an ideal of the selected product, presented on the
/// deterministic complement basis.
struct QuotientPresentation {
  Subspace ideal;
  Subspace section;
  Algebra induced;
  ProductKind product_kind;
  /// Quotient coordinates (length = induced.dim()) of an ambient vector.
  Vec project(const Vec& x) const;
  /// Ambient representative of quotient coordinates.
  Vec lift(const Vec& q) const;
};

QuotientPresentation quotient(const Algebra& a, const Subspace& k, ProductKind kind);

/// Algebra induced on a subspace closed under the selected product,
/// expressed in the subspace's canonical basis.
Algebra restrict_to(const Algebra& a, const Subspace& s, ProductKind kind, const std::string& name);

struct CorrespondenceReport {
  bool agree = false;
  bool as_pre_ideal = false;
  bool as_commutator_ideal = false;
};

/// s is a pre-ideal of (M, *) iff s is an ideal of U(M); both sides
/// evaluated independently.
CorrespondenceReport pre_ideal_correspondence_check(const Algebra& a, const Subspace& s);

}  // namespace prealg
