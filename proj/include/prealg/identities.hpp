#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prealg/algebra.hpp"

namespace prealg {

/// Outcome of one identity check. A failed check always carries a witness
/// whose defect re-evaluates to a nonzero vector.
struct IdentityReport {
  std::string identity;
  bool holds = false;
  struct Witness {
    std::vector<std::size_t> indices;  // basis indices of the defect tuple
    Vec defect;
    std::string part;  // which equation failed, for multi-equation identities
  };
  std::optional<Witness> witness;
  std::string method = "basis-tuples";
  bool caveat = false;  // polarized fallback in characteristic <= 3
};

IdentityReport is_associative(const Algebra& a);
IdentityReport is_commutative(const Algebra& a);
IdentityReport is_anticommutative(const Algebra& a);  // antisymmetric and alternating

/// (xy)z - x(yz) = (yx)z - y(xz) on all basis triples.
IdentityReport is_pre_lie(const Algebra& a);

/// Jacobi identity for the commutator algebra U(a).
IdentityReport is_lie_admissible(const Algebra& a);

/// The two defining equations: "exchange" (xy)z + x(yz) = (yx)z + y(xz)
/// and "cyclic" [x,y]z + [y,z]x + [z,x]y = 0.
IdentityReport is_anti_pre_lie(const Algebra& a);

/// Two multilinear 4-variable equations with x o y = xy + yx.
IdentityReport is_pre_jordan(const Algebra& a);

/// Jordan identity for x o y = xy + yx. Not multilinear: over small prime
/// fields it is checked on all vector pairs; otherwise the linearized
/// identity on basis 4-tuples plus the raw identity on basis pairs is used
/// (method "polarized", with a caveat flag in characteristic <= 3).
IdentityReport is_jordan_admissible(const Algebra& a, std::size_t budget = kDefaultBudget);

std::vector<IdentityReport> classify(const Algebra& a, std::size_t budget = kDefaultBudget);

}  // namespace prealg
