#include "doctest.h"

#include <cmath>

#include "scforge/rational.hpp"

using namespace scforge;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("0.2") == Rational(1, 5));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("8/3") == Rational(8, 3));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rational formatting round-trips") {
  CHECK(to_string(Rational(1, 5)) == "1/5");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational(to_string(Rational(-7, 12))) == Rational(-7, 12));
}

TEST_CASE("round_half_away matches llround on a lattice") {
  for (int num = -50; num <= 50; ++num) {
    for (int den = 1; den <= 8; ++den) {
      const Rational r(num, den);
      const auto expected = std::llround(static_cast<double>(num) / den);
      CHECK(round_half_away(r) == expected);
    }
  }
}

TEST_CASE("floor_to_int") {
  CHECK(floor_to_int(Rational(7, 2)) == 3);
  CHECK(floor_to_int(Rational(-7, 2)) == -4);
  CHECK(floor_to_int(Rational(4)) == 4);
}
