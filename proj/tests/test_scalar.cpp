#include <doctest.h>

#include "algfact/scalar.hpp"

using namespace algfact;

static const FieldSpec Q = FieldSpec::rationals();
static const FieldSpec F5 = FieldSpec::prime(5);

TEST_CASE("primality gate") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(97));
  CHECK(is_prime_u64(1'000'003));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(4));
  CHECK_FALSE(is_prime_u64(91));  // 7 * 13
  CHECK_THROWS_AS(FieldSpec::prime(1), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime(6), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 62), InvalidField);
}

TEST_CASE("field spec identity") {
  CHECK(Q.str() == "Q");
  CHECK(F5.str() == "F5");
  CHECK(F5.modulus() == 5);
  CHECK(Q == FieldSpec::rationals());
  CHECK(F5 != FieldSpec::prime(7));
  CHECK_FALSE(Q.is_prime_field());
  CHECK(F5.is_prime_field());
}

TEST_CASE("rational parsing stays canonical") {
  CHECK(Scalar::parse(Q, "3/6").str() == "1/2");
  CHECK(Scalar::parse(Q, "-4/2").str() == "-2");
  CHECK(Scalar::parse(Q, "0/5").str() == "0");
  CHECK(Scalar::parse(Q, "7").str() == "7");
  CHECK(Scalar::parse(Q, "-7/21").str() == "-1/3");
  CHECK(Scalar::parse(Q, "1/2") == Scalar::parse(Q, "2/4"));
  CHECK_THROWS_AS(Scalar::parse(Q, "abc"), Error);
  CHECK_THROWS_AS(Scalar::parse(Q, ""), Error);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/2/3"), Error);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), Error);
}

TEST_CASE("prime field parsing reduces") {
  CHECK(Scalar::parse(F5, "12").residue() == 2);
  CHECK(Scalar::parse(F5, "-1").residue() == 4);
  CHECK(Scalar::parse(F5, "0").residue() == 0);
  // longer than any machine word; ends in 0 so it is divisible by 5
  CHECK(Scalar::parse(F5, "123456789012345678901234567890").residue() == 0);
  CHECK(Scalar::parse(F5, "10000000000000000000001").residue() == 1);
  CHECK_THROWS_AS(Scalar::parse(F5, "1/2"), Error);
  CHECK_THROWS_AS(Scalar::parse(F5, "x"), Error);
}

TEST_CASE("rational arithmetic") {
  const Scalar h = Scalar::parse(Q, "1/2");
  const Scalar t = Scalar::parse(Q, "1/3");
  CHECK((h + t).str() == "5/6");
  CHECK((h - t).str() == "1/6");
  CHECK((h * t).str() == "1/6");
  CHECK((h / Scalar::parse(Q, "1/4")).str() == "2");
  CHECK((-Scalar::parse(Q, "3/4")).str() == "-3/4");
  CHECK(h.inverse().str() == "2");
  CHECK(Scalar::of_int(Q, -7).str() == "-7");
  CHECK(Scalar::zero(Q).is_zero());
  CHECK(Scalar::one(Q).is_one());
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
  const Scalar three = Scalar::of_int(F5, 3);
  const Scalar four = Scalar::of_int(F5, 4);
  CHECK((three + four).residue() == 2);
  CHECK((three * four).residue() == 2);
  CHECK((three - four).residue() == 4);
  CHECK((-Scalar::zero(F5)).residue() == 0);
  CHECK(Scalar::of_int(F5, 2).inverse().residue() == 3);
  CHECK(Scalar::of_int(F5, -7).residue() == 3);
  CHECK(Scalar::of_int(F5, 10).is_zero());
  CHECK_THROWS_AS(Scalar::zero(F5).inverse(), DivisionByZero);
}

TEST_CASE("fields do not mix") {
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F5), FieldMismatch);
  CHECK_THROWS_AS(Scalar::one(F5) * Scalar::one(FieldSpec::prime(7)), FieldMismatch);
}

TEST_CASE("str round trips") {
  for (const char* t : {"0", "1", "-1", "22/7", "-355/113"}) {
    const Scalar s = Scalar::parse(Q, t);
    CHECK(Scalar::parse(Q, s.str()) == s);
  }
  for (int v = 0; v < 5; ++v) {
    const Scalar s = Scalar::of_int(F5, v);
    CHECK(Scalar::parse(F5, s.str()) == s);
  }
}
