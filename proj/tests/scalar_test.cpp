#include <doctest.h>

#include "hopfpi/scalar.hpp"

using namespace hopfpi;

TEST_CASE("rational parsing is canonical") {
  Field q = Field::rationals();
  CHECK(Scalar::parse("2/4", q).to_string() == "1/2");
  CHECK(Scalar::parse("-6/4", q).to_string() == "-3/2");
  CHECK(Scalar::parse("0", q).to_string() == "0");
  CHECK(Scalar::parse("7/1", q).to_string() == "7");
  CHECK_THROWS_AS(Scalar::parse("1/0", q), InputError);
  CHECK_THROWS_AS(Scalar::parse("-0", q), InputError);
  CHECK_THROWS_AS(Scalar::parse("01", q), InputError);
  CHECK_THROWS_AS(Scalar::parse("1/-2", q), InputError);
  CHECK_THROWS_AS(Scalar::parse("", q), InputError);
  CHECK_THROWS_AS(Scalar::parse("x", q), InputError);
}

TEST_CASE("rational arithmetic") {
  Field q = Field::rationals();
  Scalar a = Scalar::parse("1/3", q);
  Scalar b = Scalar::parse("1/6", q);
  CHECK((a + b).to_string() == "1/2");
  CHECK((a - b).to_string() == "1/6");
  CHECK((a * b).to_string() == "1/18");
  CHECK((a / b).to_string() == "2");
  CHECK((-a).to_string() == "-1/3");
  CHECK(a.inverse().to_string() == "3");
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), InputError);
  CHECK(Scalar::from_int(-4, q) + Scalar::from_int(4, q) == Scalar::zero(q));
}

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  Scalar three = Scalar::parse("3", f7);
  Scalar five = Scalar::parse("5", f7);
  CHECK((three / five).to_string() == "2");  // 5^-1 = 3, 3*3 = 9 = 2
  CHECK((three + five).to_string() == "1");
  CHECK((-three).to_string() == "4");
  CHECK(five.inverse().to_string() == "3");
  CHECK(Scalar::from_int(-1, f7).to_string() == "6");
  CHECK_THROWS_AS(Scalar::parse("7", f7), InputError);   // out of range
  CHECK_THROWS_AS(Scalar::parse("1/2", f7), InputError); // no fractions
  CHECK_THROWS_AS(Field::prime(6), InputError);
  CHECK_THROWS_AS(Field::prime(1), InputError);
}

TEST_CASE("fields never mix") {
  Scalar a = Scalar::one(Field::rationals());
  Scalar b = Scalar::one(Field::prime(5));
  CHECK_THROWS_AS(a + b, InputError);
}
