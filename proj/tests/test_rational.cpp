#include <doctest.h>

#include "tangent/error.hpp"
#include "tangent/rational.hpp"

using namespace tangent;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InvalidParameter);
  CHECK_THROWS_AS(parse_rational("1e3"), InvalidParameter);
}

TEST_CASE("to_string is canonical") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-8, 4)) == "-2");
  CHECK(to_string(parse_rational(to_string(Rational(-22, 7)))) == "-22/7");
}

TEST_CASE("exact_rational is the binary value of the double") {
  CHECK(exact_rational(0.5) == Rational(1, 2));
  // 0.1 rounds to 3602879701896397 / 2^55
  CHECK(exact_rational(0.1) == parse_rational("3602879701896397/36028797018963968"));
  CHECK(to_double(exact_rational(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("binomial and exact_sqrt") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(8, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  Rational root;
  CHECK(exact_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2), root));
  CHECK_FALSE(exact_sqrt(Rational(-4), root));
}

TEST_CASE("ipow") {
  CHECK(ipow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(ipow(2.0, 10) == 1024.0);
  CHECK(ipow(Rational(5), 0) == Rational(1));
}
