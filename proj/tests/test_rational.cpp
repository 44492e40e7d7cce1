#include "doctest.h"

#include "lielab/error.hpp"
#include "lielab/rational.hpp"

using lielab::parse_rational;
using lielab::Rational;

TEST_CASE("rational strings are canonical") {
  CHECK(lielab::to_string(parse_rational("6/4")) == "3/2");
  CHECK(lielab::to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(lielab::to_string(parse_rational("0/7")) == "0");
  CHECK(lielab::to_string(parse_rational("+5")) == "5");
  CHECK(lielab::to_string(Rational(1, 3) + Rational(1, 6)) == "1/2");
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "x", "1//2", "1 /2", "--1", "4/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), lielab::ParseError);
  }
}

TEST_CASE("round trip through strings") {
  for (const Rational& x : {Rational(0), Rational(-7), Rational(22, 7), Rational(-1, 1000000007)}) {
    CHECK(parse_rational(lielab::to_string(x)) == x);
  }
}
