#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "prealg/algebra.hpp"

namespace prealg {

namespace detail {
struct MagmaTreeNode;
}

/// Element of the free cyclic magma: a full binary tree, degree = leaf
/// count. Immutable value type with structural equality and a canonical
/// total order (by degree, then left subtree, then right subtree).
class MagmaTree {
 public:
  static MagmaTree leaf();
  static MagmaTree node(const MagmaTree& l, const MagmaTree& r);

  bool is_leaf() const noexcept { return impl_ == nullptr; }
  const MagmaTree& left() const;
  const MagmaTree& right() const;
  std::size_t degree() const noexcept { return degree_; }

  bool operator==(const MagmaTree& o) const;
  bool operator<(const MagmaTree& o) const;

  /// Monomial rendering in one indeterminate: "x", "xx", "(xx)x", "x(xx)".
  std::string str() const;

 private:
  MagmaTree() : degree_(1) {}
  std::shared_ptr<const detail::MagmaTreeNode> impl_;  // null = leaf
  std::size_t degree_;
};

/// All trees grouped by degree 1..max_degree, in canonical order: within a
/// degree, by left-subtree degree, then recursively.
std::vector<std::vector<MagmaTree>> enumerate_trees(std::size_t max_degree);

inline MagmaTree tree_product(const MagmaTree& s, const MagmaTree& t) { return MagmaTree::node(s, t); }

/// Element of the truncated non-associative tensor algebra T_na(R):
/// finitely many tree-indexed components, the component at a tree of
/// degree d being a coordinate vector of length base_dim^d (mixed-radix
/// index, leftmost tensor slot most significant). Trees of degree beyond
/// max_degree are dropped by multiplication.
class GradedElement {
 public:
  GradedElement(const CoeffDomain& d, std::size_t base_dim, std::size_t max_degree);

  const CoeffDomain& domain() const noexcept { return dom_; }
  std::size_t base_dim() const noexcept { return base_dim_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  const std::map<MagmaTree, Vec>& components() const noexcept { return comp_; }

  bool is_zero() const noexcept { return comp_.empty(); }
  const Vec* component(const MagmaTree& t) const;
  void add_term(const MagmaTree& t, std::size_t index, const Scalar& c);
  void set_component(const MagmaTree& t, Vec v);

  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator-(const GradedElement& o) const;
  GradedElement scaled(const Scalar& c) const;
  bool operator==(const GradedElement& o) const;

  /// Graded product: tensor concatenation on each component pair whose
  /// degree sum stays within the truncation; overflow pairs are dropped.
  GradedElement graded_mul(const GradedElement& o) const;

  static std::size_t power(std::size_t base, std::size_t exp);

 private:
  void prune();
  CoeffDomain dom_;
  std::size_t base_dim_;
  std::size_t max_degree_;
  std::map<MagmaTree, Vec> comp_;
};

/// Image of u under the algebra morphism extending the identity on the
/// degree-1 slot: each pure tensor is folded through the tree shape with
/// the algebra product, then summed.
Vec universal_morphism_eval(const Algebra& a, const GradedElement& u);

enum class GeneratorKind { PreLie, LieAdmissible };

struct GeneratorSet {
  GeneratorKind kind;
  std::size_t base_dim = 0;
  std::size_t max_degree = 0;
  CoeffDomain domain = CoeffDomain::rationals();
  std::vector<GradedElement> generators;
};

/// Instantiates the defining generator families at all basis tuples:
/// the degree-2 family x@y - y@x - [x,y] for both kinds, plus the
/// kind's degree-3 family.
GeneratorSet theorem_generators(const Algebra& a, GeneratorKind kind, std::size_t max_degree = 4);

struct KernelCheckReport {
  bool all_in_kernel = false;
  bool identity_holds = false;  // is_pre_lie / is_lie_admissible
  bool agree = false;
  std::size_t first_outside = 0;  // generator index, when not all vanish
};

/// phi maps every generator to zero iff the algebra satisfies the
/// corresponding identity; both sides computed independently.
KernelCheckReport generators_in_kernel_check(const Algebra& a, GeneratorKind kind);

struct ClosureReport {
  std::vector<std::pair<MagmaTree, std::size_t>> component_dims;  // I intersect each slot
  std::size_t total_dim = 0;
  bool degree1_trivial = false;  // I intersect Leaf slot = 0
};

/// Degreewise two-sided ideal closure of the generators inside the
/// truncated algebra, by multiplication with all basis elements.
ClosureReport graded_ideal_closure(const GeneratorSet& gens, std::size_t max_degree,
                                   std::size_t budget = 100000);

}  // namespace prealg
