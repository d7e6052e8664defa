#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prealg/tensor.hpp"
#include "support.hpp"

using namespace prealg;
using test_support::a2;

TEST_CASE("tree enumeration matches the Catalan recurrence") {
  auto levels = enumerate_trees(5);
  std::vector<std::size_t> counts;
  for (const auto& level : levels) counts.push_back(level.size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 5, 14});

  // independent oracle: c_n = sum_{i=1}^{n-1} c_i c_{n-i}, c_1 = 1
  std::vector<std::size_t> catalan{0, 1};
  for (std::size_t n = 2; n <= 7; ++n) {
    std::size_t c = 0;
    for (std::size_t i = 1; i < n; ++i) c += catalan[i] * catalan[n - i];
    catalan.push_back(c);
  }
  auto levels7 = enumerate_trees(7);
  for (std::size_t n = 1; n <= 7; ++n) CHECK(levels7[n - 1].size() == catalan[n]);

  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(1)[0][0].is_leaf());
}

TEST_CASE("degree-3 trees and rendering") {
  auto levels = enumerate_trees(3);
  REQUIRE(levels[2].size() == 2);
  CHECK(levels[2][0].str() == "x(xx)");
  CHECK(levels[2][1].str() == "(xx)x");
  CHECK(levels[0][0].str() == "x");
  CHECK(levels[1][0].str() == "xx");
}

TEST_CASE("tree product") {
  MagmaTree x = MagmaTree::leaf();
  MagmaTree xx = tree_product(x, x);
  CHECK(xx.degree() == 2);
  CHECK(tree_product(xx, x).degree() == 3);
  CHECK_FALSE(tree_product(xx, x) == tree_product(x, xx));
  CHECK(tree_product(xx, x) == tree_product(tree_product(x, x), x));

  test_support::Rng rng(61);
  auto levels = enumerate_trees(4);
  for (int iter = 0; iter < 100; ++iter) {
    const auto& la = levels[rng.below(4)];
    const auto& lb = levels[rng.below(4)];
    const MagmaTree& s = la[rng.below(la.size())];
    const MagmaTree& t = lb[rng.below(lb.size())];
    CHECK(tree_product(s, t).degree() == s.degree() + t.degree());
  }
}

TEST_CASE("tree ordering is a strict total order per degree") {
  auto levels = enumerate_trees(5);
  for (const auto& level : levels)
    for (std::size_t i = 0; i < level.size(); ++i)
      for (std::size_t j = 0; j < level.size(); ++j) {
        if (i < j) CHECK(level[i] < level[j]);
        if (i == j) {
          CHECK_FALSE(level[i] < level[j]);
          CHECK(level[i] == level[j]);
        }
      }
}

TEST_CASE("graded element arithmetic") {
  CoeffDomain q = CoeffDomain::rationals();
  GradedElement zero(q, 2, 4);
  CHECK(zero.is_zero());
  CHECK(zero.graded_mul(zero).is_zero());

  MagmaTree x = MagmaTree::leaf();
  GradedElement u(q, 2, 4);
  u.add_term(x, 0, Scalar::one(q));  // e1 at the leaf
  GradedElement v(q, 2, 4);
  v.add_term(x, 1, Scalar::one(q));  // e2 at the leaf

  GradedElement uv = u.graded_mul(v);
  MagmaTree xx = tree_product(x, x);
  REQUIRE(uv.component(xx));
  // e1 (x) e2 sits at mixed-radix index 0*2+1 = 1
  CHECK((*uv.component(xx))[1].is_one());
  CHECK((*uv.component(xx))[0].is_zero());

  CHECK(u.graded_mul(zero).is_zero());
  CHECK((u + v) - v == u);
  CHECK(u.scaled(Scalar::zero(q)).is_zero());

  // scalars multiply along tree products in base dim 1
  GradedElement s1(q, 1, 4), s2(q, 1, 4);
  s1.add_term(x, 0, Scalar::of_int(q, 3));
  s2.add_term(xx, 0, Scalar::of_int(q, 5));
  GradedElement prod = s1.graded_mul(s2);
  REQUIRE(prod.component(tree_product(x, xx)));
  CHECK((*prod.component(tree_product(x, xx)))[0] == Scalar::of_int(q, 15));
}

TEST_CASE("truncation drops overflowing pairs") {
  CoeffDomain q = CoeffDomain::rationals();
  MagmaTree x = MagmaTree::leaf();
  MagmaTree xx = tree_product(x, x);
  GradedElement u(q, 1, 3);
  u.add_term(xx, 0, Scalar::one(q));
  CHECK_FALSE(u.graded_mul(u).component(tree_product(xx, xx)));
  CHECK(u.graded_mul(u).is_zero());
  // mixed support: only the fitting pair survives
  GradedElement w(q, 1, 3);
  w.add_term(x, 0, Scalar::one(q));
  w.add_term(xx, 0, Scalar::one(q));
  GradedElement ww = w.graded_mul(w);
  CHECK(ww.component(tree_product(x, x)));
  CHECK(ww.component(tree_product(x, xx)));
  CHECK(ww.component(tree_product(xx, x)));
  CHECK_FALSE(ww.component(tree_product(xx, xx)));
}

TEST_CASE("universal morphism evaluation") {
  CoeffDomain q = CoeffDomain::rationals();
  Algebra a = a2(q);
  MagmaTree x = MagmaTree::leaf();
  MagmaTree xx = tree_product(x, x);

  GradedElement u(q, 2, 4);
  Vec coeffs = {Scalar::of_int(q, 3), Scalar::of_int(q, -2)};
  u.set_component(x, coeffs);
  CHECK(universal_morphism_eval(a, u) == coeffs);

  GradedElement t(q, 2, 4);
  t.add_term(xx, 1, Scalar::one(q));  // e1 (x) e2
  CHECK(universal_morphism_eval(a, t) == unit_vec(q, 2, 1));  // e1 e2 = e2

  CHECK_THROWS_AS(universal_morphism_eval(a, GradedElement(q, 3, 4)), Error);
}

TEST_CASE("phi is multiplicative on truncation-safe pairs") {
  test_support::Rng rng(62);
  CoeffDomain f5 = CoeffDomain::prime_field(5);
  Algebra a = test_support::random_algebra(rng, f5, 2, "T");
  auto levels = enumerate_trees(2);
  for (int iter = 0; iter < 100; ++iter) {
    // random supports of degree <= 2 so products stay within D = 4
    GradedElement u(f5, 2, 4), v(f5, 2, 4);
    for (const auto& level : levels)
      for (const MagmaTree& t : level) {
        std::size_t len = GradedElement::power(2, t.degree());
        for (std::size_t i = 0; i < len; ++i) {
          u.add_term(t, i, test_support::random_scalar(rng, f5));
          v.add_term(t, i, test_support::random_scalar(rng, f5));
        }
      }
    Vec lhs = universal_morphism_eval(a, u.graded_mul(v));
    Vec rhs = a.mul(universal_morphism_eval(a, u), universal_morphism_eval(a, v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generator families") {
  CoeffDomain q = CoeffDomain::rationals();

  // dim 1: the degree-2 generator at (x, x) vanishes
  std::vector<Vec> sc1{Vec{Scalar::of_int(q, 2)}};
  Algebra one_dim("c", q, 1, {"e1"}, sc1);
  GeneratorSet gs1 = theorem_generators(one_dim, GeneratorKind::PreLie);
  CHECK(gs1.generators.size() == 2);  // 1 degree-2 + 1 degree-3
  CHECK(gs1.generators[0].is_zero());

  // A2 at (e1, e2): e1@e2 - e2@e1 at degree 2, minus e2 at the leaf
  Algebra a = a2(q);
  GeneratorSet gs = theorem_generators(a, GeneratorKind::PreLie);
  CHECK(gs.generators.size() == 4 + 8);
  const GradedElement& g12 = gs.generators[0 * 2 + 1];
  MagmaTree x = MagmaTree::leaf();
  MagmaTree xx = tree_product(x, x);
  REQUIRE(g12.component(xx));
  CHECK((*g12.component(xx))[1].is_one());                    // +e1 (x) e2
  CHECK((*g12.component(xx))[2] == Scalar::of_int(q, -1));    // -e2 (x) e1
  REQUIRE(g12.component(x));
  CHECK((*g12.component(x))[1] == Scalar::of_int(q, -1));     // -[e1,e2] = -e2

  // Lie-admissible degree-3 generator at (x, x, x) vanishes
  GeneratorSet laa = theorem_generators(a, GeneratorKind::LieAdmissible);
  CHECK(laa.generators.size() == 4 + 8);
  CHECK(laa.generators[4 + 0].is_zero());   // (e1, e1, e1)
  CHECK(laa.generators[4 + 7].is_zero());   // (e2, e2, e2)
}

TEST_CASE("degree-2 generators always map to zero") {
  test_support::Rng rng(63);
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  for (int iter = 0; iter < 20; ++iter) {
    Algebra a = test_support::random_algebra(rng, f3, 2);
    GeneratorSet gs = theorem_generators(a, GeneratorKind::PreLie);
    for (std::size_t k = 0; k < 4; ++k)  // the dim^2 degree-2 generators
      CHECK(is_zero_vec(universal_morphism_eval(a, gs.generators[k])));
  }
}

TEST_CASE("kernel membership matches the identity checkers") {
  CoeffDomain q = CoeffDomain::rationals();
  Algebra a = a2(q);
  KernelCheckReport rep = generators_in_kernel_check(a, GeneratorKind::PreLie);
  CHECK(rep.all_in_kernel);
  CHECK(rep.identity_holds);
  CHECK(rep.agree);

  Algebra npl = test_support::non_pre_lie_example(q);
  KernelCheckReport nrep = generators_in_kernel_check(npl, GeneratorKind::PreLie);
  CHECK_FALSE(nrep.all_in_kernel);
  CHECK(nrep.agree);

  test_support::Rng rng(64);
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  for (int iter = 0; iter < 50; ++iter) {
    Algebra r = test_support::random_algebra(rng, f3, 2);
    CHECK(generators_in_kernel_check(r, GeneratorKind::PreLie).agree);
    CHECK(generators_in_kernel_check(r, GeneratorKind::LieAdmissible).agree);
  }
}

TEST_CASE("ideal closure of the zero algebra's generators") {
  CoeffDomain q = CoeffDomain::rationals();
  // degree-2 component is the antisymmetric part of R (x) R
  for (std::size_t dim : {2u, 3u}) {
    Algebra z = Algebra::zero("z", q, dim);
    GeneratorSet gs = theorem_generators(z, GeneratorKind::PreLie, 3);
    ClosureReport rep = graded_ideal_closure(gs, 3);
    CHECK(rep.degree1_trivial);
    bool saw_deg2 = false;
    for (const auto& [tree, d] : rep.component_dims) {
      if (tree.degree() == 2) {
        saw_deg2 = true;
        CHECK(d == dim * (dim - 1) / 2);
      }
      if (tree.degree() == 1) CHECK(d == 0);
    }
    CHECK(saw_deg2);
  }

  // dim-1 base: degree-2 generator is zero, so nothing at degree 2
  std::vector<Vec> sc1{Vec{Scalar::zero(q)}};
  Algebra one_dim("c", q, 1, {"e1"}, sc1);
  ClosureReport rep1 = graded_ideal_closure(theorem_generators(one_dim, GeneratorKind::PreLie, 3), 3);
  for (const auto& [tree, d] : rep1.component_dims)
    if (tree.degree() == 2) CHECK(d == 0);
}

TEST_CASE("closure keeps degree 1 trivial on pre-Lie inputs at D = 4") {
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  Algebra a = a2(f3);
  ClosureReport rep = graded_ideal_closure(theorem_generators(a, GeneratorKind::PreLie, 4), 4);
  CHECK(rep.degree1_trivial);
  CHECK(rep.total_dim > 0);

  CHECK_THROWS_AS(
      graded_ideal_closure(theorem_generators(a, GeneratorKind::PreLie, 4), 4, /*budget=*/10),
      Error);
}
