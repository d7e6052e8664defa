#include "prealg/substructures.hpp"

namespace prealg {

namespace {

void require_ambient(const Algebra& a, const Subspace& s) {
  if (!a.domain().is_field()) throw Error(Errc::NonFieldDomain, "substructure ops require a field domain");
  if (s.domain() != a.domain()) throw Error(Errc::DomainMismatch, "subspace domain differs from algebra");
  if (s.ambient_dim() != a.dim()) throw Error(Errc::AmbientMismatch, "subspace ambient != algebra dim");
}

bool kind_is_ideal(SubstructureKind k) {
  return k == SubstructureKind::Ideal || k == SubstructureKind::PreIdeal ||
         k == SubstructureKind::GeneralizedIdeal;
}

Vec kind_product(const Algebra& a, SubstructureKind k, const Vec& x, const Vec& y) {
  switch (k) {
    case SubstructureKind::Ideal:
    case SubstructureKind::Subalgebra: return a.mul(x, y);
    case SubstructureKind::PreIdeal:
    case SubstructureKind::PreSubalgebra: return a.bracket(x, y);
    case SubstructureKind::GeneralizedIdeal:
    case SubstructureKind::GeneralizedSubalgebra: return a.circle(x, y);
  }
  throw Error(Errc::Internal, "bad substructure kind");
}

}  // namespace

const char* substructure_kind_name(SubstructureKind k) {
  switch (k) {
    case SubstructureKind::Ideal: return "ideal";
    case SubstructureKind::PreIdeal: return "pre-ideal";
    case SubstructureKind::GeneralizedIdeal: return "generalized-ideal";
    case SubstructureKind::Subalgebra: return "subalgebra";
    case SubstructureKind::PreSubalgebra: return "pre-subalgebra";
    case SubstructureKind::GeneralizedSubalgebra: return "generalized-subalgebra";
  }
  return "?";
}

SubstructureReport is_substructure(const Algebra& a, const Subspace& s, SubstructureKind kind) {
  require_ambient(a, s);
  SubstructureReport rep;
  rep.holds = true;
  if (kind_is_ideal(kind)) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec x = unit_vec(a.domain(), a.dim(), i);
      for (std::size_t j = 0; j < s.rank(); ++j) {
        const Vec& gen = s.basis()[j];
        bool ok = s.contains(kind_product(a, kind, x, gen));
        if (ok && kind == SubstructureKind::Ideal) ok = s.contains(a.mul(gen, x));
        if (!ok) {
          rep.holds = false;
          rep.witness = {i, j};
          return rep;
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < s.rank(); ++i)
      for (std::size_t j = 0; j < s.rank(); ++j) {
        if (!s.contains(kind_product(a, kind, s.basis()[i], s.basis()[j]))) {
          rep.holds = false;
          rep.witness = {i, j};
          return rep;
        }
      }
  }
  return rep;
}

Subspace generated_substructure(const Algebra& a, const std::vector<Vec>& gens, SubstructureKind kind) {
  if (!a.domain().is_field()) throw Error(Errc::NonFieldDomain, "closure requires a field domain");
  Subspace cur = Subspace::span(a.domain(), a.dim(), gens);
  for (std::size_t round = 0; round <= a.dim(); ++round) {
    std::vector<Vec> next = cur.basis();
    if (kind_is_ideal(kind)) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec x = unit_vec(a.domain(), a.dim(), i);
        for (const Vec& g : cur.basis()) {
          next.push_back(kind_product(a, kind, x, g));
          if (kind == SubstructureKind::Ideal) next.push_back(a.mul(g, x));
        }
      }
    } else {
      for (const Vec& g : cur.basis())
        for (const Vec& h : cur.basis()) next.push_back(kind_product(a, kind, g, h));
    }
    Subspace grown = Subspace::span(a.domain(), a.dim(), next);
    if (grown == cur) return cur;
    cur = grown;
  }
  throw Error(Errc::Internal, "closure failed to stabilize within dim rounds");
}

Subspace nucleus(const Algebra& a) {
  if (!a.domain().is_field()) throw Error(Errc::NonFieldDomain, "nucleus requires a field domain");
  std::size_t n = a.dim();
  // Rows of the stacked linear system: for each basis pair (i, j) and each
  // slot, the map x -> associator with x in that slot.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix slot1(a.domain(), n, n), slot2(a.domain(), n, n), slot3(a.domain(), n, n);
      for (std::size_t c = 0; c < n; ++c) {
        Vec x = unit_vec(a.domain(), n, c);
        Vec ei = unit_vec(a.domain(), n, i), ej = unit_vec(a.domain(), n, j);
        Vec v1 = a.associator(x, ei, ej);
        Vec v2 = a.associator(ei, x, ej);
        Vec v3 = a.associator(ei, ej, x);
        for (std::size_t r = 0; r < n; ++r) {
          slot1.at(r, c) = v1[r];
          slot2.at(r, c) = v2[r];
          slot3.at(r, c) = v3[r];
        }
      }
      for (std::size_t r = 0; r < n; ++r) {
        rows.push_back(slot1.row(r));
        rows.push_back(slot2.row(r));
        rows.push_back(slot3.row(r));
      }
    }
  if (rows.empty()) return Subspace::full(a.domain(), n);
  return kernel(Matrix::from_rows(a.domain(), rows, n));
}

Subspace center(const Algebra& a) {
  Subspace nuc = nucleus(a);
  std::size_t n = a.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(a.domain(), n, n);
    for (std::size_t c = 0; c < n; ++c) {
      Vec v = a.bracket(unit_vec(a.domain(), n, c), unit_vec(a.domain(), n, i));
      for (std::size_t r = 0; r < n; ++r) m.at(r, c) = v[r];
    }
    for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
  }
  Subspace commuting = kernel(Matrix::from_rows(a.domain(), rows, n));
  return subspace_intersect(nuc, commuting);
}

Subspace pre_ideal_commutator(const Algebra& a, const Subspace& i, const Subspace& j) {
  require_ambient(a, i);
  require_ambient(a, j);
  if (!is_substructure(a, i, SubstructureKind::PreIdeal).holds)
    throw Error(Errc::NotPreIdeal, "first argument is not a pre-ideal");
  if (!is_substructure(a, j, SubstructureKind::PreIdeal).holds)
    throw Error(Errc::NotPreIdeal, "second argument is not a pre-ideal");
  std::vector<Vec> gens;
  for (const Vec& u : i.basis())
    for (const Vec& v : j.basis()) gens.push_back(a.bracket(u, v));
  return generated_substructure(a, gens, SubstructureKind::PreIdeal);
}

Subspace huq_smith_commutator(const Algebra& a, const Subspace& i, const Subspace& j) {
  require_ambient(a, i);
  require_ambient(a, j);
  if (!is_substructure(a, i, SubstructureKind::Ideal).holds)
    throw Error(Errc::NotIdeal, "first argument is not an ideal");
  if (!is_substructure(a, j, SubstructureKind::Ideal).holds)
    throw Error(Errc::NotIdeal, "second argument is not an ideal");
  std::vector<Vec> gens;
  for (const Vec& u : i.basis())
    for (const Vec& v : j.basis()) {
      gens.push_back(a.mul(u, v));
      gens.push_back(a.mul(v, u));
    }
  return generated_substructure(a, gens, SubstructureKind::Ideal);
}

namespace {

SubstructureKind ideal_kind_for(ProductKind kind) {
  switch (kind) {
    case ProductKind::Dot: return SubstructureKind::Ideal;
    case ProductKind::Bracket: return SubstructureKind::PreIdeal;
    case ProductKind::Circle: return SubstructureKind::GeneralizedIdeal;
  }
  throw Error(Errc::Internal, "bad product kind");
}

Vec product_of(const Algebra& a, ProductKind kind, const Vec& x, const Vec& y) {
  switch (kind) {
    case ProductKind::Dot: return a.mul(x, y);
    case ProductKind::Bracket: return a.bracket(x, y);
    case ProductKind::Circle: return a.circle(x, y);
  }
  throw Error(Errc::Internal, "bad product kind");
}

}  // namespace

Vec QuotientPresentation::project(const Vec& x) const {
  // x = k + s uniquely; return the section coefficients.
  std::size_t n = ideal.ambient_dim();
  std::vector<Vec> cols;
  for (const Vec& b : ideal.basis()) cols.push_back(b);
  for (const Vec& b : section.basis()) cols.push_back(b);
  Matrix m = Matrix::from_columns(ideal.domain(), cols, n);
  auto sol = solve(m, x);
  if (!sol) throw Error(Errc::Internal, "direct-sum decomposition failed");
  Vec q;
  for (std::size_t i = 0; i < section.rank(); ++i) q.push_back((*sol)[ideal.rank() + i]);
  return q;
}

Vec QuotientPresentation::lift(const Vec& q) const {
  if (q.size() != section.rank()) throw Error(Errc::DimensionMismatch, "quotient coordinate length");
  Vec x = zero_vec(ideal.domain(), ideal.ambient_dim());
  for (std::size_t i = 0; i < section.rank(); ++i) x = add(x, scale(q[i], section.basis()[i]));
  return x;
}

QuotientPresentation quotient(const Algebra& a, const Subspace& k, ProductKind kind) {
  require_ambient(a, k);
  if (!is_substructure(a, k, ideal_kind_for(kind)).holds)
    throw Error(Errc::KindMismatch, std::string("subspace is not a ") +
                                        substructure_kind_name(ideal_kind_for(kind)));
  Subspace section = complement(k);
  std::size_t m = section.rank();
  QuotientPresentation pres{k, section, Algebra::zero(a.name() + ".quot", a.domain(), m), kind};
  if (m == 0) return pres;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("q" + std::to_string(i + 1));
  std::vector<Vec> sc;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec p = product_of(a, kind, section.basis()[i], section.basis()[j]);
      sc.push_back(pres.project(p));
    }
  pres.induced = Algebra(a.name() + ".quot", a.domain(), m, labels, sc);
  return pres;
}

Algebra restrict_to(const Algebra& a, const Subspace& s, ProductKind kind, const std::string& name) {
  require_ambient(a, s);
  std::size_t m = s.rank();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("s" + std::to_string(i + 1));
  std::vector<Vec> sc;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec p = product_of(a, kind, s.basis()[i], s.basis()[j]);
      auto coords = s.coordinates_of(p);
      if (!coords) throw Error(Errc::NotClosed, "subspace is not closed under the selected product");
      sc.push_back(*coords);
    }
  return Algebra(name, a.domain(), m, labels, sc);
}

CorrespondenceReport pre_ideal_correspondence_check(const Algebra& a, const Subspace& s) {
  CorrespondenceReport rep;
  rep.as_pre_ideal = is_substructure(a, s, SubstructureKind::PreIdeal).holds;
  rep.as_commutator_ideal =
      is_substructure(a.commutator_algebra(), s, SubstructureKind::Ideal).holds;
  rep.agree = rep.as_pre_ideal == rep.as_commutator_ideal;
  return rep;
}

}  // namespace prealg
