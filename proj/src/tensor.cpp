#include "prealg/tensor.hpp"

#include <algorithm>

#include "prealg/identities.hpp"

namespace prealg {

namespace detail {
struct MagmaTreeNode {
  MagmaTree l, r;
};
}  // namespace detail

MagmaTree MagmaTree::leaf() { return MagmaTree(); }

MagmaTree MagmaTree::node(const MagmaTree& l, const MagmaTree& r) {
  MagmaTree t;
  t.impl_ = std::make_shared<detail::MagmaTreeNode>(detail::MagmaTreeNode{l, r});
  t.degree_ = l.degree_ + r.degree_;
  return t;
}

const MagmaTree& MagmaTree::left() const {
  if (!impl_) throw Error(Errc::InvalidArgument, "leaf has no subtrees");
  return impl_->l;
}

const MagmaTree& MagmaTree::right() const {
  if (!impl_) throw Error(Errc::InvalidArgument, "leaf has no subtrees");
  return impl_->r;
}

bool MagmaTree::operator==(const MagmaTree& o) const {
  if (degree_ != o.degree_) return false;
  if (is_leaf() || o.is_leaf()) return is_leaf() == o.is_leaf();
  if (impl_ == o.impl_) return true;
  return impl_->l == o.impl_->l && impl_->r == o.impl_->r;
}

bool MagmaTree::operator<(const MagmaTree& o) const {
  if (degree_ != o.degree_) return degree_ < o.degree_;
  if (is_leaf()) return false;  // equal-degree leaves are equal
  if (impl_ == o.impl_) return false;
  if (impl_->l == o.impl_->l) return impl_->r < o.impl_->r;
  return impl_->l < o.impl_->l;
}

std::string MagmaTree::str() const {
  if (is_leaf()) return "x";
  auto wrap = [](const MagmaTree& t) { return t.is_leaf() ? t.str() : "(" + t.str() + ")"; };
  return wrap(impl_->l) + wrap(impl_->r);
}

std::vector<std::vector<MagmaTree>> enumerate_trees(std::size_t max_degree) {
  if (max_degree < 1) throw Error(Errc::InvalidArgument, "max_degree must be >= 1");
  std::vector<std::vector<MagmaTree>> by_degree(max_degree + 1);
  by_degree[1].push_back(MagmaTree::leaf());
  for (std::size_t d = 2; d <= max_degree; ++d)
    for (std::size_t ld = 1; ld < d; ++ld)
      for (const MagmaTree& l : by_degree[ld])
        for (const MagmaTree& r : by_degree[d - ld]) by_degree[d].push_back(MagmaTree::node(l, r));
  by_degree.erase(by_degree.begin());
  return by_degree;
}

GradedElement::GradedElement(const CoeffDomain& d, std::size_t base_dim, std::size_t max_degree)
    : dom_(d), base_dim_(base_dim), max_degree_(max_degree) {
  if (base_dim_ == 0) throw Error(Errc::InvalidArgument, "base dim must be positive");
  if (max_degree_ == 0) throw Error(Errc::InvalidArgument, "max degree must be positive");
}

std::size_t GradedElement::power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

const Vec* GradedElement::component(const MagmaTree& t) const {
  auto it = comp_.find(t);
  return it == comp_.end() ? nullptr : &it->second;
}

void GradedElement::add_term(const MagmaTree& t, std::size_t index, const Scalar& c) {
  if (t.degree() > max_degree_) throw Error(Errc::InvalidArgument, "tree degree exceeds truncation");
  std::size_t len = power(base_dim_, t.degree());
  if (index >= len) throw Error(Errc::InvalidArgument, "tensor index out of range");
  auto it = comp_.find(t);
  if (it == comp_.end()) it = comp_.emplace(t, zero_vec(dom_, len)).first;
  it->second[index] += c;
  if (is_zero_vec(it->second)) comp_.erase(it);
}

void GradedElement::set_component(const MagmaTree& t, Vec v) {
  if (t.degree() > max_degree_) throw Error(Errc::InvalidArgument, "tree degree exceeds truncation");
  if (v.size() != power(base_dim_, t.degree()))
    throw Error(Errc::DimensionMismatch, "component length must be base_dim^degree");
  if (is_zero_vec(v))
    comp_.erase(t);
  else
    comp_[t] = std::move(v);
}

void GradedElement::prune() {
  for (auto it = comp_.begin(); it != comp_.end();) {
    if (is_zero_vec(it->second))
      it = comp_.erase(it);
    else
      ++it;
  }
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
  if (dom_ != o.dom_ || base_dim_ != o.base_dim_ || max_degree_ != o.max_degree_)
    throw Error(Errc::DomainMismatch, "graded elements live in different truncated algebras");
  GradedElement r = *this;
  for (const auto& [t, v] : o.comp_) {
    auto it = r.comp_.find(t);
    if (it == r.comp_.end())
      r.comp_[t] = v;
    else
      it->second = add(it->second, v);
  }
  r.prune();
  return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
  return *this + o.scaled(-Scalar::one(dom_));
}

GradedElement GradedElement::scaled(const Scalar& c) const {
  GradedElement r(dom_, base_dim_, max_degree_);
  if (c.is_zero()) return r;
  for (const auto& [t, v] : comp_) r.comp_[t] = scale(c, v);
  r.prune();
  return r;
}

bool GradedElement::operator==(const GradedElement& o) const {
  return dom_ == o.dom_ && base_dim_ == o.base_dim_ && max_degree_ == o.max_degree_ &&
         comp_ == o.comp_;
}

GradedElement GradedElement::graded_mul(const GradedElement& o) const {
  if (dom_ != o.dom_ || base_dim_ != o.base_dim_ || max_degree_ != o.max_degree_)
    throw Error(Errc::DomainMismatch, "graded elements live in different truncated algebras");
  GradedElement r(dom_, base_dim_, max_degree_);
  for (const auto& [s, u] : comp_) {
    for (const auto& [t, v] : o.comp_) {
      if (s.degree() + t.degree() > max_degree_) continue;  // truncation drop
      MagmaTree st = MagmaTree::node(s, t);
      std::size_t vlen = v.size();
      Vec w = zero_vec(dom_, u.size() * vlen);
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < vlen; ++j) {
          if (v[j].is_zero()) continue;
          w[i * vlen + j] = u[i] * v[j];
        }
      }
      auto it = r.comp_.find(st);
      if (it == r.comp_.end())
        r.comp_[st] = std::move(w);
      else
        it->second = add(it->second, w);
    }
  }
  r.prune();
  return r;
}

namespace {

// Columns of the evaluation map R^{(d(t))} -> A: fold each pure tensor
// through the tree shape with the algebra product.
std::vector<Vec> evaluation_columns(const Algebra& a, const MagmaTree& t) {
  std::size_t n = a.dim();
  if (t.is_leaf()) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(unit_vec(a.domain(), n, i));
    return cols;
  }
  std::vector<Vec> lcols = evaluation_columns(a, t.left());
  std::vector<Vec> rcols = evaluation_columns(a, t.right());
  std::vector<Vec> cols;
  cols.reserve(lcols.size() * rcols.size());
  for (const Vec& lv : lcols)
    for (const Vec& rv : rcols) cols.push_back(a.mul(lv, rv));
  return cols;
}

}  // namespace

Vec universal_morphism_eval(const Algebra& a, const GradedElement& u) {
  if (u.base_dim() != a.dim())
    throw Error(Errc::DimensionMismatch, "graded element base dim differs from algebra dim");
  if (u.domain() != a.domain()) throw Error(Errc::DomainMismatch, "domains differ");
  Vec out = zero_vec(a.domain(), a.dim());
  for (const auto& [t, v] : u.components()) {
    std::vector<Vec> cols = evaluation_columns(a, t);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) out = add(out, scale(v[i], cols[i]));
  }
  return out;
}

namespace {

std::size_t tensor_index(std::size_t dim, std::initializer_list<std::size_t> digits) {
  std::size_t idx = 0;
  for (std::size_t d : digits) idx = idx * dim + d;
  return idx;
}

}  // namespace

GeneratorSet theorem_generators(const Algebra& a, GeneratorKind kind, std::size_t max_degree) {
  if (max_degree < 3) throw Error(Errc::InvalidArgument, "generators need max_degree >= 3");
  GeneratorSet out;
  out.kind = kind;
  out.base_dim = a.dim();
  out.max_degree = max_degree;
  out.domain = a.domain();
  std::size_t n = a.dim();
  const CoeffDomain& d = a.domain();
  MagmaTree x = MagmaTree::leaf();
  MagmaTree xx = MagmaTree::node(x, x);
  MagmaTree x_xx = MagmaTree::node(x, xx);   // x(xx)
  MagmaTree xx_x = MagmaTree::node(xx, x);   // (xx)x
  Scalar one = Scalar::one(d);

  // degree-2 family: x@y - y@x - [x,y], shared by both kinds
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GradedElement g(d, n, max_degree);
      g.add_term(xx, tensor_index(n, {i, j}), one);
      g.add_term(xx, tensor_index(n, {j, i}), -one);
      Vec br = a.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!br[k].is_zero()) g.add_term(x, k, -br[k]);
      out.generators.push_back(std::move(g));
    }

  if (kind == GeneratorKind::PreLie) {
    // (x@y)@z - (y@x)@z - x@(y@z) + y@(x@z)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          GradedElement g(d, n, max_degree);
          g.add_term(xx_x, tensor_index(n, {i, j, k}), one);
          g.add_term(xx_x, tensor_index(n, {j, i, k}), -one);
          g.add_term(x_xx, tensor_index(n, {i, j, k}), -one);
          g.add_term(x_xx, tensor_index(n, {j, i, k}), one);
          out.generators.push_back(std::move(g));
        }
  } else {
    // (x,y,z) + (y,z,x) + (z,x,y) - (y,x,z) - (x,z,y) - (z,y,x),
    // with (x,y,z) = (x@y)@z - x@(y@z)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          GradedElement g(d, n, max_degree);
          auto assoc = [&](std::size_t p, std::size_t q, std::size_t r, const Scalar& c) {
            g.add_term(xx_x, tensor_index(n, {p, q, r}), c);
            g.add_term(x_xx, tensor_index(n, {p, q, r}), -c);
          };
          assoc(i, j, k, one);
          assoc(j, k, i, one);
          assoc(k, i, j, one);
          assoc(j, i, k, -one);
          assoc(i, k, j, -one);
          assoc(k, j, i, -one);
          out.generators.push_back(std::move(g));
        }
  }
  return out;
}

KernelCheckReport generators_in_kernel_check(const Algebra& a, GeneratorKind kind) {
  GeneratorSet gens = theorem_generators(a, kind, 3);
  KernelCheckReport rep;
  rep.all_in_kernel = true;
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    if (!is_zero_vec(universal_morphism_eval(a, gens.generators[i]))) {
      rep.all_in_kernel = false;
      rep.first_outside = i;
      break;
    }
  }
  rep.identity_holds =
      kind == GeneratorKind::PreLie ? is_pre_lie(a).holds : is_lie_admissible(a).holds;
  rep.agree = rep.all_in_kernel == rep.identity_holds;
  return rep;
}

namespace {

// Flattened coordinates of the whole truncated module, tree slots in
// canonical order.
struct Flattening {
  std::vector<MagmaTree> trees;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;

  Flattening(std::size_t base_dim, std::size_t max_degree) {
    for (auto& level : enumerate_trees(max_degree))
      for (MagmaTree& t : level) {
        trees.push_back(t);
        offsets.push_back(total);
        total += GradedElement::power(base_dim, t.degree());
      }
  }

  std::size_t slot(const MagmaTree& t) const {
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (trees[i] == t) return i;
    throw Error(Errc::Internal, "tree not in flattening");
  }

  Vec flatten(const GradedElement& g, const CoeffDomain& d) const {
    Vec v = zero_vec(d, total);
    for (const auto& [t, comp] : g.components()) {
      std::size_t off = offsets[slot(t)];
      for (std::size_t i = 0; i < comp.size(); ++i) v[off + i] = comp[i];
    }
    return v;
  }

  GradedElement unflatten(const Vec& v, const CoeffDomain& d, std::size_t base_dim,
                          std::size_t max_degree) const {
    GradedElement g(d, base_dim, max_degree);
    for (std::size_t s = 0; s < trees.size(); ++s) {
      std::size_t len = GradedElement::power(base_dim, trees[s].degree());
      Vec comp(v.begin() + offsets[s], v.begin() + offsets[s] + len);
      g.set_component(trees[s], std::move(comp));
    }
    return g;
  }
};

}  // namespace

ClosureReport graded_ideal_closure(const GeneratorSet& gens, std::size_t max_degree,
                                   std::size_t budget) {
  const CoeffDomain& d = gens.domain;
  if (!d.is_field()) throw Error(Errc::NonFieldDomain, "ideal closure requires a field domain");
  std::size_t base_dim = gens.base_dim;
  Flattening flat(base_dim, max_degree);
  if (flat.total > budget)
    throw Error(Errc::BudgetExceeded, "truncated module dimension " + std::to_string(flat.total) +
                                          " exceeds budget");
  // multipliers: all basis elements of degree <= max_degree - 1
  std::vector<GradedElement> multipliers;
  for (std::size_t s = 0; s < flat.trees.size(); ++s) {
    const MagmaTree& t = flat.trees[s];
    if (t.degree() + 1 > max_degree) continue;
    std::size_t len = GradedElement::power(base_dim, t.degree());
    for (std::size_t i = 0; i < len; ++i) {
      GradedElement m(d, base_dim, max_degree);
      m.add_term(t, i, Scalar::one(d));
      multipliers.push_back(std::move(m));
    }
  }
  std::vector<Vec> rows;
  std::vector<GradedElement> pending;
  for (const GradedElement& g : gens.generators) {
    GradedElement resized(d, base_dim, max_degree);
    for (const auto& [t, v] : g.components()) resized.set_component(t, v);
    pending.push_back(resized);
    rows.push_back(flat.flatten(resized, d));
  }
  Subspace span = Subspace::span(d, flat.total, rows);
  while (true) {
    std::vector<GradedElement> next_pending;
    std::vector<Vec> grown = span.basis();
    for (const GradedElement& g : pending) {
      for (const GradedElement& m : multipliers) {
        for (GradedElement prod : {m.graded_mul(g), g.graded_mul(m)}) {
          if (prod.is_zero()) continue;
          Vec fv = flat.flatten(prod, d);
          if (!span.contains(fv)) {
            grown.push_back(fv);
            next_pending.push_back(std::move(prod));
          }
        }
      }
    }
    Subspace grown_span = Subspace::span(d, flat.total, grown);
    if (grown_span.rank() == span.rank()) break;
    // re-express the new span and continue closing only on new elements
    span = grown_span;
    pending.clear();
    for (const Vec& fv : span.basis())
      pending.push_back(flat.unflatten(fv, d, base_dim, max_degree));
  }
  ClosureReport rep;
  rep.total_dim = span.rank();
  for (std::size_t s = 0; s < flat.trees.size(); ++s) {
    // dimension of I intersected with the slot of tree s
    std::size_t len = GradedElement::power(base_dim, flat.trees[s].degree());
    std::vector<Vec> slot_gens;
    for (std::size_t i = 0; i < len; ++i) {
      Vec v = zero_vec(d, flat.total);
      v[flat.offsets[s] + i] = Scalar::one(d);
      slot_gens.push_back(std::move(v));
    }
    Subspace slot_space = Subspace::span(d, flat.total, slot_gens);
    std::size_t dim_here = subspace_intersect(span, slot_space).rank();
    rep.component_dims.emplace_back(flat.trees[s], dim_here);
    if (flat.trees[s].is_leaf()) rep.degree1_trivial = dim_here == 0;
  }
  return rep;
}

}  // namespace prealg
