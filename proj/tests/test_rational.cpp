#include <doctest.h>

#include "ppp/errors.hpp"
#include "ppp/rational.hpp"

using namespace ppp;

TEST_CASE("decimal parsing is exact") {
  CHECK(parse_decimal("0.1") == Rational(1, 10));
  CHECK(parse_decimal("-0.0576") == Rational(-576, 10000));
  CHECK(parse_decimal("42") == Rational(42));
  CHECK(parse_decimal("9.5e-3") == Rational(95, 10000));
  CHECK(parse_decimal("2e3") == Rational(2000));
  CHECK(parse_decimal("1e-12") == Rational(1, 1000000000000LL));
  CHECK_THROWS_AS(parse_decimal("abc"), ParseError);
  CHECK_THROWS_AS(parse_decimal("1.2.3"), ParseError);
}

TEST_CASE("tiny and huge solver outputs are snapped sensibly") {
  CHECK(parse_decimal("9.9999999999999995e-17") == Rational(0));
  CHECK(parse_decimal("0.33333333333333331") ==
        Rational(33333333333333331LL, 100000000000000000LL));
}

TEST_CASE("terminating decimals print shortest") {
  CHECK(decimal_string(Rational(1)) == "1");
  CHECK(decimal_string(Rational(0)) == "0");
  CHECK(decimal_string(Rational(-3)) == "-3");
  CHECK(decimal_string(Rational(1, 2)) == "0.5");
  CHECK(decimal_string(Rational(4, 5)) == "0.8");
  CHECK(decimal_string(Rational(1, 10)) == "0.1");
  CHECK(decimal_string(Rational(576, 10000)) == "0.0576");
  CHECK(decimal_string(Rational(-7, 4)) == "-1.75");
  CHECK(decimal_string(Rational(1, 1024)) == "0.0009765625");
}

TEST_CASE("non-terminating decimals round to 17 significant digits") {
  CHECK(decimal_string(Rational(1, 3)) == "0.33333333333333333");
  CHECK(decimal_string(Rational(2, 3)) == "0.66666666666666667");
  CHECK(decimal_string(Rational(-1, 3)) == "-0.33333333333333333");
  CHECK(decimal_string(Rational(100, 3)) == "33.333333333333333");
  CHECK(decimal_string(Rational(1, 7)) == "0.14285714285714286");
}

TEST_CASE("rounding helpers") {
  CHECK(rational_ceil(Rational(4, 5)) == 1);
  CHECK(rational_ceil(Rational(8, 4)) == 2);
  CHECK(rational_ceil(Rational(-3, 2)) == -1);
  CHECK(rational_floor(Rational(-3, 2)) == -2);
  CHECK(rational_round(Rational(9, 10)) == 1);
  CHECK(rational_round(Rational(1, 2)) == 1);
  CHECK(rational_round(Rational(-1, 2)) == 0);
}
