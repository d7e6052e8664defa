#include "prealg/identities.hpp"

namespace prealg {

namespace {

IdentityReport sweep_pairs(const Algebra& a, const std::string& name,
                           Vec (*defect)(const Algebra&, std::size_t, std::size_t)) {
  IdentityReport rep;
  rep.identity = name;
  rep.holds = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec d = defect(a, i, j);
      if (!is_zero_vec(d)) {
        rep.holds = false;
        rep.witness = IdentityReport::Witness{{i, j}, std::move(d), ""};
        return rep;
      }
    }
  return rep;
}

Vec basis(const Algebra& a, std::size_t i) { return unit_vec(a.domain(), a.dim(), i); }

}  // namespace

IdentityReport is_associative(const Algebra& a) {
  IdentityReport rep;
  rep.identity = "associative";
  rep.holds = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vec d = a.associator(basis(a, i), basis(a, j), basis(a, k));
        if (!is_zero_vec(d)) {
          rep.holds = false;
          rep.witness = IdentityReport::Witness{{i, j, k}, std::move(d), ""};
          return rep;
        }
      }
  return rep;
}

IdentityReport is_commutative(const Algebra& a) {
  return sweep_pairs(a, "commutative", [](const Algebra& a, std::size_t i, std::size_t j) {
    return a.bracket_basis(i, j);
  });
}

IdentityReport is_anticommutative(const Algebra& a) {
  IdentityReport rep;
  rep.identity = "anticommutative";
  rep.holds = true;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec sq = a.basis_product(i, i);
    if (!is_zero_vec(sq)) {
      rep.holds = false;
      rep.witness = IdentityReport::Witness{{i, i}, std::move(sq), "alternating"};
      return rep;
    }
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec d = a.circle_basis(i, j);  // xy + yx
      if (!is_zero_vec(d)) {
        rep.holds = false;
        rep.witness = IdentityReport::Witness{{i, j}, std::move(d), "antisymmetric"};
        return rep;
      }
    }
  return rep;
}

IdentityReport is_pre_lie(const Algebra& a) {
  IdentityReport rep;
  rep.identity = "pre-lie";
  rep.holds = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vec x = basis(a, i), y = basis(a, j), z = basis(a, k);
        Vec d = sub(a.associator(x, y, z), a.associator(y, x, z));
        if (!is_zero_vec(d)) {
          rep.holds = false;
          rep.witness = IdentityReport::Witness{{i, j, k}, std::move(d), ""};
          return rep;
        }
      }
  return rep;
}

IdentityReport is_lie_admissible(const Algebra& a) {
  IdentityReport rep;
  rep.identity = "lie-admissible";
  rep.holds = true;
  Algebra u = a.commutator_algebra();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vec x = basis(a, i), y = basis(a, j), z = basis(a, k);
        Vec d = add(add(u.mul(u.mul(x, y), z), u.mul(u.mul(y, z), x)), u.mul(u.mul(z, x), y));
        if (!is_zero_vec(d)) {
          rep.holds = false;
          rep.witness = IdentityReport::Witness{{i, j, k}, std::move(d), ""};
          return rep;
        }
      }
  return rep;
}

IdentityReport is_anti_pre_lie(const Algebra& a) {
  IdentityReport rep;
  rep.identity = "anti-pre-lie";
  rep.holds = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vec x = basis(a, i), y = basis(a, j), z = basis(a, k);
        Vec lhs = add(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)));
        Vec rhs = add(a.mul(a.mul(y, x), z), a.mul(y, a.mul(x, z)));
        Vec d = sub(lhs, rhs);
        if (!is_zero_vec(d)) {
          rep.holds = false;
          rep.witness = IdentityReport::Witness{{i, j, k}, std::move(d), "exchange"};
          return rep;
        }
      }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Vec x = basis(a, i), y = basis(a, j), z = basis(a, k);
        Vec d = add(add(a.mul(a.bracket(x, y), z), a.mul(a.bracket(y, z), x)),
                    a.mul(a.bracket(z, x), y));
        if (!is_zero_vec(d)) {
          rep.holds = false;
          rep.witness = IdentityReport::Witness{{i, j, k}, std::move(d), "cyclic"};
          return rep;
        }
      }
  return rep;
}

namespace {

// eq1: (x o y)(zu) + (y o z)(xu) + (z o x)(yu)
//    = z((x o y)u) + x((y o z)u) + y((z o x)u)
Vec pre_jordan_defect1(const Algebra& a, const Vec& x, const Vec& y, const Vec& z, const Vec& u) {
  Vec lhs = add(add(a.mul(a.circle(x, y), a.mul(z, u)), a.mul(a.circle(y, z), a.mul(x, u))),
                a.mul(a.circle(z, x), a.mul(y, u)));
  Vec rhs = add(add(a.mul(z, a.mul(a.circle(x, y), u)), a.mul(x, a.mul(a.circle(y, z), u))),
                a.mul(y, a.mul(a.circle(z, x), u)));
  return sub(lhs, rhs);
}

// eq2: x(y(zu)) + z(y(xu)) + ((x o z) o y)u  =  same right side as eq1
Vec pre_jordan_defect2(const Algebra& a, const Vec& x, const Vec& y, const Vec& z, const Vec& u) {
  Vec lhs = add(add(a.mul(x, a.mul(y, a.mul(z, u))), a.mul(z, a.mul(y, a.mul(x, u)))),
                a.mul(a.circle(a.circle(x, z), y), u));
  Vec rhs = add(add(a.mul(z, a.mul(a.circle(x, y), u)), a.mul(x, a.mul(a.circle(y, z), u))),
                a.mul(y, a.mul(a.circle(z, x), u)));
  return sub(lhs, rhs);
}

}  // namespace

IdentityReport is_pre_jordan(const Algebra& a) {
  IdentityReport rep;
  rep.identity = "pre-jordan";
  rep.holds = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        for (std::size_t l = 0; l < a.dim(); ++l) {
          Vec x = basis(a, i), y = basis(a, j), z = basis(a, k), u = basis(a, l);
          Vec d1 = pre_jordan_defect1(a, x, y, z, u);
          if (!is_zero_vec(d1)) {
            rep.holds = false;
            rep.witness = IdentityReport::Witness{{i, j, k, l}, std::move(d1), "eq1"};
            return rep;
          }
          Vec d2 = pre_jordan_defect2(a, x, y, z, u);
          if (!is_zero_vec(d2)) {
            rep.holds = false;
            rep.witness = IdentityReport::Witness{{i, j, k, l}, std::move(d2), "eq2"};
            return rep;
          }
        }
  return rep;
}

namespace {

// Jordan defect in the commutative algebra c: (x o y) o (x o x) - x o (y o (x o x)).
Vec jordan_defect(const Algebra& c, const Vec& x, const Vec& y) {
  Vec xx = c.mul(x, x);
  return sub(c.mul(c.mul(x, y), xx), c.mul(x, c.mul(y, xx)));
}

// Linearization of the cubic x-slot of the Jordan defect: substitute the
// three x-occurrences by (x1, x2, x3) in all distinct ways and sum.
Vec jordan_linearized(const Algebra& c, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& y) {
  auto g = [&](const Vec& p, const Vec& q, const Vec& r) {
    Vec qr = c.mul(q, r);
    return sub(c.mul(c.mul(p, y), qr), c.mul(p, c.mul(y, qr)));
  };
  return add(add(g(x1, x2, x3), g(x2, x1, x3)), g(x3, x1, x2));
}

}  // namespace

IdentityReport is_jordan_admissible(const Algebra& a, std::size_t budget) {
  IdentityReport rep;
  rep.identity = "jordan-admissible";
  rep.holds = true;
  Algebra c = a.anticommutator_algebra();
  const CoeffDomain& d = a.domain();
  bool exhaustive_possible = false;
  if (d.kind() == DomainKind::PrimeField) {
    double total = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) total *= static_cast<double>(d.modulus());
    exhaustive_possible = total <= static_cast<double>(budget);
  }
  if (exhaustive_possible) {
    rep.method = "exhaustive";
    std::vector<Vec> all = enumerate_vectors(d, a.dim(), budget);
    for (std::size_t xi = 0; xi < all.size(); ++xi)
      for (std::size_t yi = 0; yi < all.size(); ++yi) {
        Vec def = jordan_defect(c, all[xi], all[yi]);
        if (!is_zero_vec(def)) {
          rep.holds = false;
          rep.witness = IdentityReport::Witness{{xi, yi}, std::move(def), "vector-pair"};
          return rep;
        }
      }
    return rep;
  }
  if (d.kind() != DomainKind::Rationals && d.characteristic() <= 3) rep.caveat = true;
  rep.method = "polarized";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec def = jordan_defect(c, basis(a, i), basis(a, j));
      if (!is_zero_vec(def)) {
        rep.holds = false;
        rep.witness = IdentityReport::Witness{{i, j}, std::move(def), "raw-pair"};
        return rep;
      }
    }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        for (std::size_t l = 0; l < a.dim(); ++l) {
          Vec def = jordan_linearized(c, basis(a, i), basis(a, j), basis(a, k), basis(a, l));
          if (!is_zero_vec(def)) {
            rep.holds = false;
            rep.witness = IdentityReport::Witness{{i, j, k, l}, std::move(def), "linearized"};
            return rep;
          }
        }
  return rep;
}

std::vector<IdentityReport> classify(const Algebra& a, std::size_t budget) {
  std::vector<IdentityReport> out;
  out.push_back(is_associative(a));
  out.push_back(is_commutative(a));
  out.push_back(is_anticommutative(a));
  out.push_back(is_pre_lie(a));
  out.push_back(is_lie_admissible(a));
  out.push_back(is_anti_pre_lie(a));
  out.push_back(is_pre_jordan(a));
  out.push_back(is_jordan_admissible(a, budget));
  return out;
}

}  // namespace prealg
