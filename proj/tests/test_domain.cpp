#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prealg/domain.hpp"
#include "support.hpp"

using namespace prealg;

TEST_CASE("domain construction and characteristics") {
  CoeffDomain q = CoeffDomain::rationals();
  CHECK(q.characteristic() == 0);
  CHECK(q.is_field());

  CoeffDomain f5 = CoeffDomain::prime_field(5);
  CHECK(f5.characteristic() == 5);
  CHECK(f5.is_field());

  CoeffDomain z4 = CoeffDomain::residue_ring(4);
  CHECK(z4.characteristic() == 4);
  CHECK_FALSE(z4.is_field());

  CHECK_THROWS_AS(CoeffDomain::prime_field(4), Error);
  CHECK_THROWS_AS(CoeffDomain::prime_field(1), Error);
  CHECK_THROWS_AS(CoeffDomain::residue_ring(1), Error);
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(7917));
}

TEST_CASE("scalar arithmetic examples") {
  CoeffDomain q = CoeffDomain::rationals();
  Scalar half = Scalar::parse(q, "1/2");
  Scalar third = Scalar::parse(q, "1/3");
  CHECK((half + third).str() == "5/6");

  CoeffDomain z4 = CoeffDomain::residue_ring(4);
  CHECK((Scalar::of_int(z4, 2) * Scalar::of_int(z4, 3)).str() == "2");

  for (std::int64_t p : {2, 3, 5}) {
    CoeffDomain fp = CoeffDomain::prime_field(p);
    Scalar m1 = Scalar::of_int(fp, p - 1);
    CHECK((m1 * m1).is_one());
  }
}

TEST_CASE("try_invert examples") {
  CoeffDomain q = CoeffDomain::rationals();
  CHECK(Scalar::of_int(q, 2).try_invert()->str() == "1/2");
  CHECK_FALSE(Scalar::zero(q).try_invert().has_value());

  CoeffDomain z4 = CoeffDomain::residue_ring(4);
  CHECK_FALSE(Scalar::of_int(z4, 2).try_invert().has_value());
  CHECK(Scalar::of_int(z4, 3).try_invert()->str() == "3");

  CoeffDomain f5 = CoeffDomain::prime_field(5);
  CHECK(Scalar::of_int(f5, 2).try_invert()->str() == "3");
}

TEST_CASE("two_profile classification") {
  CHECK(CoeffDomain::rationals().two_profile() == TwoProfile::TwoInvertible);
  CHECK(CoeffDomain::prime_field(2).two_profile() == TwoProfile::CharacteristicTwo);
  CHECK(CoeffDomain::prime_field(3).two_profile() == TwoProfile::TwoInvertible);
  CHECK(CoeffDomain::residue_ring(2).two_profile() == TwoProfile::CharacteristicTwo);
  CHECK(CoeffDomain::residue_ring(4).two_profile() == TwoProfile::TwoTorsion);
  CHECK(CoeffDomain::residue_ring(6).two_profile() == TwoProfile::TwoTorsion);
  CHECK(CoeffDomain::residue_ring(9).two_profile() == TwoProfile::TwoInvertible);
  CHECK(CoeffDomain::residue_ring(15).two_profile() == TwoProfile::TwoInvertible);
}

TEST_CASE("two_profile matches invertibility of 2") {
  for (const CoeffDomain& d :
       {CoeffDomain::rationals(), CoeffDomain::prime_field(2), CoeffDomain::prime_field(7),
        CoeffDomain::residue_ring(4), CoeffDomain::residue_ring(9), CoeffDomain::residue_ring(12)}) {
    bool invertible = Scalar::of_int(d, 2).try_invert().has_value();
    CHECK((d.two_profile() == TwoProfile::TwoInvertible) == invertible);
  }
}

TEST_CASE("ring axioms on random triples") {
  test_support::Rng rng(20260809);
  for (const CoeffDomain& d :
       {CoeffDomain::rationals(), CoeffDomain::prime_field(2), CoeffDomain::prime_field(5),
        CoeffDomain::residue_ring(4), CoeffDomain::residue_ring(6)}) {
    for (int iter = 0; iter < 1000; ++iter) {
      Scalar a = test_support::random_scalar(rng, d);
      Scalar b = test_support::random_scalar(rng, d);
      Scalar c = test_support::random_scalar(rng, d);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("inverses multiply to one") {
  test_support::Rng rng(7);
  for (const CoeffDomain& d :
       {CoeffDomain::rationals(), CoeffDomain::prime_field(7), CoeffDomain::residue_ring(12)}) {
    for (int iter = 0; iter < 200; ++iter) {
      Scalar a = test_support::random_scalar(rng, d);
      auto inv = a.try_invert();
      if (inv) {
        CHECK((a * *inv).is_one());
        CHECK((*inv * a).is_one());
      }
    }
  }
}

TEST_CASE("domain mixing is rejected") {
  Scalar a = Scalar::of_int(CoeffDomain::prime_field(3), 1);
  Scalar b = Scalar::of_int(CoeffDomain::prime_field(5), 1);
  CHECK_THROWS_AS((void)(a + b), Error);
  CHECK_THROWS_AS((void)(a * b), Error);
}

TEST_CASE("scalar parsing and canonical form") {
  CoeffDomain q = CoeffDomain::rationals();
  CHECK(Scalar::parse(q, "2/4").str() == "1/2");
  CHECK(Scalar::parse(q, "-6/4").str() == "-3/2");
  CHECK(Scalar::parse(q, "0/7").str() == "0");
  CHECK(Scalar::parse(q, "123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(q, ""), Error);
  CHECK_THROWS_AS(Scalar::parse(q, "a"), Error);
  CHECK_THROWS_AS(Scalar::parse(q, "1.5"), Error);

  CoeffDomain f7 = CoeffDomain::prime_field(7);
  CHECK(Scalar::parse(f7, "-1").str() == "6");
  CHECK(Scalar::parse(f7, "1/2").str() == "4");
  CoeffDomain z6 = CoeffDomain::residue_ring(6);
  CHECK_THROWS_AS(Scalar::parse(z6, "1/2"), Error);
  CHECK(Scalar::parse(z6, "1/5").str() == "5");
}
