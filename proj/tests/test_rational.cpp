#include <doctest.h>

#include <stdexcept>

#include "intorder/rational.hpp"

using intorder::ParseError;
using intorder::Rational;

TEST_CASE("rational normalizes to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(1, 3).den() == 3);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational ordering is exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(Rational(7, 1) == Rational(7));
  CHECK(Rational(1, 3) <= Rational(2, 6));
  // Values a double would conflate.
  CHECK(Rational(1, 3) != Rational(33333333, 100000000));
  CHECK(Rational(10000000000LL, 3) > Rational(9999999999LL, 3));
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic rejects 64-bit overflow instead of wrapping") {
  Rational huge(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(huge * Rational(8), std::overflow_error);
  // Intermediate products above 64 bits are fine when the result reduces.
  Rational a(1, INT64_MAX / 4);
  CHECK(a * Rational(INT64_MAX / 4) == Rational(1));
}

TEST_CASE("rational parsing accepts p and p/q only") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1e3"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("/2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
  CHECK_THROWS_AS(Rational::parse("two"), ParseError);
}

TEST_CASE("rational str round trips") {
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-5).str() == "-5");
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
}
