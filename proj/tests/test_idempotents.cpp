#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prealg/idempotents.hpp"
#include "prealg/morphisms.hpp"
#include "support.hpp"

using namespace prealg;
using test_support::a2;

namespace {

Matrix diag(const CoeffDomain& d, std::vector<std::int64_t> entries) {
  Matrix m(d, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = Scalar::of_int(d, entries[i]);
  return m;
}

}  // namespace

TEST_CASE("is_idempotent_endo basics") {
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  Algebra a = a2(f3);
  Matrix id = Matrix::identity(f3, 2);
  Matrix zero(f3, 2, 2);

  for (IdempotentKind kind : {IdempotentKind::PreMorphism, IdempotentKind::GeneralizedMorphism,
                              IdempotentKind::AntiPreMorphism}) {
    CHECK(is_idempotent_endo(a, zero, kind).holds);
  }
  CHECK(is_idempotent_endo(a, id, IdempotentKind::PreMorphism).holds);
  CHECK(is_idempotent_endo(a, id, IdempotentKind::GeneralizedMorphism).holds);
  // identity is anti-pre only when 2[x,y] = 0; A2/F_3 has [e1,e2] = e2
  CHECK_FALSE(is_idempotent_endo(a, id, IdempotentKind::AntiPreMorphism).holds);

  CHECK(is_idempotent_endo(a, diag(f3, {1, 0}), IdempotentKind::PreMorphism).holds);

  Matrix not_idem = diag(f3, {2, 0});
  IdempotentReport rep = is_idempotent_endo(a, not_idem, IdempotentKind::PreMorphism);
  CHECK_FALSE(rep.idempotent);
  CHECK_FALSE(rep.holds);

  CHECK_THROWS_AS(is_idempotent_endo(a, Matrix(f3, 2, 3), IdempotentKind::PreMorphism), Error);
  CoeffDomain f2 = CoeffDomain::prime_field(2);
  CHECK_THROWS_AS(
      is_idempotent_endo(a2(f2), Matrix(f2, 2, 2), IdempotentKind::AntiPreMorphism), Error);
  CoeffDomain z4 = CoeffDomain::residue_ring(4);
  CHECK_THROWS_AS(
      is_idempotent_endo(a2(z4), Matrix(z4, 2, 2), IdempotentKind::AntiPreMorphism), Error);
}

TEST_CASE("pair extraction and reconstruction") {
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  Algebra a = a2(f3);

  DecompositionPair full_pair =
      pair_from_idempotent(a, Matrix::identity(f3, 2), IdempotentKind::PreMorphism);
  CHECK(full_pair.k_part.rank() == 0);
  CHECK(full_pair.b_part == Subspace::full(f3, 2));
  CHECK(idempotent_from_pair(full_pair, a) == Matrix::identity(f3, 2));

  DecompositionPair zero_pair =
      pair_from_idempotent(a, Matrix(f3, 2, 2), IdempotentKind::PreMorphism);
  CHECK(zero_pair.k_part == Subspace::full(f3, 2));
  CHECK(zero_pair.b_part.rank() == 0);
  CHECK(idempotent_from_pair(zero_pair, a).is_zero());

  Matrix proj = diag(f3, {1, 0});
  DecompositionPair p = pair_from_idempotent(a, proj, IdempotentKind::PreMorphism);
  CHECK(p.k_part == Subspace::span(f3, 2, {unit_vec(f3, 2, 1)}));
  CHECK(p.b_part == Subspace::span(f3, 2, {unit_vec(f3, 2, 0)}));
  CHECK(is_substructure(a, p.k_part, SubstructureKind::PreIdeal).holds);
  CHECK(is_substructure(a, p.b_part, SubstructureKind::PreSubalgebra).holds);
  CHECK(idempotent_from_pair(p, a) == proj);

  CHECK_THROWS_AS(pair_from_idempotent(a, diag(f3, {2, 2}), IdempotentKind::PreMorphism), Error);

  // invalid pair: k = b = span(e1) is not a direct sum
  Subspace s = Subspace::span(f3, 2, {unit_vec(f3, 2, 0)});
  CHECK_THROWS_AS(idempotent_from_pair({s, s, IdempotentKind::PreMorphism}, a), Error);
}

TEST_CASE("census of idempotent matrices over F_2 on the zero algebra") {
  CoeffDomain f2 = CoeffDomain::prime_field(2);
  Algebra z = Algebra::zero("z", f2, 2);
  // brute-force oracle: count idempotent 2x2 matrices over F_2
  std::size_t idem = 0;
  for (const Matrix& m : enumerate_matrices(f2, 2, 2))
    if (m * m == m) ++idem;
  CHECK(idem == 8);
  for (IdempotentKind kind : {IdempotentKind::PreMorphism, IdempotentKind::GeneralizedMorphism}) {
    RoundtripReport rep = roundtrip_check(z, kind);
    CHECK(rep.mode == "matrix");
    CHECK(rep.e_count == 8);
    CHECK(rep.p_count == 8);
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(roundtrip_check(z, IdempotentKind::AntiPreMorphism), Error);
}

TEST_CASE("roundtrip on A2 over F_2, pre kind") {
  CoeffDomain f2 = CoeffDomain::prime_field(2);
  Algebra a = a2(f2);
  RoundtripReport rep = roundtrip_check(a, IdempotentKind::PreMorphism);
  CHECK(rep.pass);
  CHECK(rep.e_count == rep.p_count);
  // 0 and id are always in E; ({0}, M) and (M, {0}) always in P
  CHECK(is_idempotent_endo(a, Matrix(f2, 2, 2), IdempotentKind::PreMorphism).holds);
  CHECK(is_idempotent_endo(a, Matrix::identity(f2, 2), IdempotentKind::PreMorphism).holds);
  CHECK(pair_is_valid(a, Subspace::full(f2, 2), Subspace::zero(f2, 2), IdempotentKind::PreMorphism));
  CHECK(pair_is_valid(a, Subspace::zero(f2, 2), Subspace::full(f2, 2), IdempotentKind::PreMorphism));
}

TEST_CASE("roundtrip across the exhaustive F_2 dim-2 family") {
  auto family = test_support::all_f2_dim2_algebras();
  // spot-check a deterministic sample of the family here; the acceptance
  // suite runs all 256
  for (std::size_t idx = 0; idx < family.size(); idx += 17) {
    for (IdempotentKind kind : {IdempotentKind::PreMorphism, IdempotentKind::GeneralizedMorphism}) {
      RoundtripReport rep = roundtrip_check(family[idx], kind);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("pair-side enumeration when the matrix space is too big") {
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  Algebra a = a2(f3);
  RoundtripReport small = roundtrip_check(a, IdempotentKind::PreMorphism, 4096);
  CHECK(small.mode == "matrix");
  RoundtripReport forced = roundtrip_check(a, IdempotentKind::PreMorphism, 64);
  CHECK(forced.mode == "pair");
  CHECK(forced.pass);
  CHECK(forced.e_count == small.e_count);
  CHECK(forced.p_count == small.p_count);
}

TEST_CASE("idempotent algebra endomorphisms appear in E for pre and generalized") {
  test_support::Rng rng(41);
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  for (int iter = 0; iter < 10; ++iter) {
    Algebra a = test_support::random_algebra(rng, f3, 2);
    for (const Matrix& m : enumerate_matrices(f3, 2, 2)) {
      if (!(m * m == m)) continue;
      if (!classify_map(AlgebraMap(a, a, m)).algebra_morphism.holds) continue;
      CHECK(is_idempotent_endo(a, m, IdempotentKind::PreMorphism).holds);
      CHECK(is_idempotent_endo(a, m, IdempotentKind::GeneralizedMorphism).holds);
    }
  }
}

TEST_CASE("anti-pre classification matches brute force on A2/F_3") {
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  Algebra a = a2(f3);
  AntiPreClassificationReport rep = anti_pre_classification_check(a);
  CHECK(rep.agree);
  CHECK(rep.checked == 81);
  // qualifying maps must kill [M,M] = span(e2)
  for (const Matrix& m : enumerate_matrices(f3, 2, 2)) {
    if (is_idempotent_endo(a, m, IdempotentKind::AntiPreMorphism).holds) {
      CHECK(is_zero_vec(m.apply(unit_vec(f3, 2, 1))));
    }
  }
  // e = 0 always qualifies
  CHECK(is_idempotent_endo(a, Matrix(f3, 2, 2), IdempotentKind::AntiPreMorphism).holds);

  CHECK_THROWS_AS(anti_pre_classification_check(a2(CoeffDomain::prime_field(2))), Error);
}

TEST_CASE("anti-pre roundtrip over F_3") {
  test_support::Rng rng(42);
  CoeffDomain f3 = CoeffDomain::prime_field(3);
  for (int iter = 0; iter < 15; ++iter) {
    Algebra a = test_support::random_algebra(rng, f3, 2);
    RoundtripReport rep = roundtrip_check(a, IdempotentKind::AntiPreMorphism);
    CHECK(rep.pass);
  }
  // commutative algebra with zero commutators: projectors qualify freely
  Algebra z = Algebra::zero("z", f3, 2);
  RoundtripReport rep = roundtrip_check(z, IdempotentKind::AntiPreMorphism);
  CHECK(rep.pass);
}

TEST_CASE("deterministic enumeration order") {
  CoeffDomain f2 = CoeffDomain::prime_field(2);
  auto mats = enumerate_matrices(f2, 2, 2);
  CHECK(mats.size() == 16);
  CHECK(mats.front().is_zero());
  // last is the all-ones matrix
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(mats.back().at(r, c).is_one());
  CHECK_THROWS_AS(enumerate_matrices(CoeffDomain::prime_field(7), 3, 3, 4096), Error);
}
