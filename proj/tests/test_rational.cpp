#include <sstream>

#include "doctest.h"
#include "odca/rational.hpp"

using odca::BigInt;
using odca::InputError;
using odca::Rational;

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(1, 2);
  Rational b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("rational parsing accepts non-canonical text") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-7/2").str() == "-7/2");
  CHECK(Rational::parse("1/-2").str() == "-1/2");
  CHECK(Rational::parse("3") == Rational(3));
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), InputError);
}

TEST_CASE("rational comparisons and sign") {
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(5, 5) == Rational(1));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(3, 7).sign() == 1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
}

TEST_CASE("rational survives value ranges beyond 64 bits") {
  Rational big = Rational(1);
  for (int i = 0; i < 100; ++i) big *= Rational(2);
  CHECK(big.numerator() == BigInt("1267650600228229401496703205376"));
  CHECK(big.denominator() == 1);
  CHECK((big / big) == Rational(1));
}
