#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prealg/substructures.hpp"

namespace prealg {

enum class IdempotentKind { PreMorphism, GeneralizedMorphism, AntiPreMorphism };

const char* idempotent_kind_name(IdempotentKind k);

struct IdempotentReport {
  bool idempotent = false;  // e * e = e as a matrix
  bool condition = false;   // the kind's bilinear condition
  bool holds = false;       // both
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// e^2 = e plus the kind's defining bilinear condition on basis pairs.
/// The anti-pre kind requires a 2-torsion-free domain.
IdempotentReport is_idempotent_endo(const Algebra& a, const Matrix& e, IdempotentKind kind);

/// (K, B) with K = ker e and B = im e; the direct-sum and per-kind
/// substructure conditions are re-verified.
struct DecompositionPair {
  Subspace k_part;
  Subspace b_part;
  IdempotentKind kind;
};

DecompositionPair pair_from_idempotent(const Algebra& a, const Matrix& e, IdempotentKind kind);

/// The projector with kernel k_part and image b_part.
Matrix idempotent_from_pair(const DecompositionPair& p, const Algebra& a);

/// Whether (k, b) is a valid pair for the kind (direct sum + conditions).
bool pair_is_valid(const Algebra& a, const Subspace& k, const Subspace& b, IdempotentKind kind);

struct RoundtripReport {
  std::size_t e_count = 0;
  std::size_t p_count = 0;
  bool counts_match = false;
  bool pair_of_idempotent_in_p = false;
  bool idempotent_of_pair_in_e = false;
  bool composites_identity = false;
  bool pass = false;
  std::string mode;  // "matrix" or "pair"
};

/// Enumerates E (idempotent endomorphisms of the kind) and P (valid pairs)
/// and checks the two maps are mutually inverse bijections. Matrix-side
/// brute force when p^(dim^2) <= budget, else pair-side enumeration.
RoundtripReport roundtrip_check(const Algebra& a, IdempotentKind kind,
                                std::size_t budget = kDefaultBudget);

struct AntiPreClassificationReport {
  bool agree = false;
  std::size_t census = 0;  // matrices satisfying the definitional check
  std::size_t checked = 0;
};

/// Dual-path check over all matrices: e is an idempotent anti-pre-
/// endomorphism iff e^2 = e, e kills all commutators, and the image
/// commutes pairwise under the algebra product.
AntiPreClassificationReport anti_pre_classification_check(const Algebra& a,
                                                          std::size_t budget = kDefaultBudget);

/// All matrices over a prime-field domain, lexicographic by entries
/// (row-major, first entry most significant). Requires p^(n*m) <= budget.
std::vector<Matrix> enumerate_matrices(const CoeffDomain& d, std::size_t rows, std::size_t cols,
                                       std::size_t budget = kDefaultBudget);

}  // namespace prealg
