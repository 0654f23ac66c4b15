#include "doctest.h"

#include <cmath>

#include "scforge/stream.hpp"

using namespace scforge;

TEST_CASE("encode places the documented levels") {
  // Zero at even width sits exactly mid-scale: "10".
  const auto zero = encode(0.0, 2, Rational(1));
  CHECK(zero.ones() == 1);
  CHECK(zero.to_text() == "10");
  CHECK(decode(zero) == 0.0);

  // Lower saturation: all-zero stream decodes to -alpha*L/2.
  const auto bottom = encode(-4.0, 8, Rational(1));
  CHECK(bottom.ones() == 0);
  CHECK(decode(bottom) == -4.0);

  // Round-to-nearest with ties away from zero.
  const auto s = encode(0.6, 4, Rational(1, 2));
  CHECK(s.ones() == 3);
  CHECK(decode(s) == 0.5);
}

TEST_CASE("encode rejects degenerate formats") {
  CHECK_THROWS_AS(encode(0.0, 0, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(encode(0.0, 4, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(encode(0.0, 4, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("decode fixtures") {
  CHECK(decode(ThermometerStream::parse("11", Rational(1))) == 1.0);
  CHECK(decode(ThermometerStream::parse("00", Rational(1))) == -1.0);
  CHECK(decode(ThermometerStream::parse("1100 0000", Rational(1, 4))) == -0.5);
}

TEST_CASE("non-thermometer patterns are rejected") {
  CHECK_THROWS_AS(ThermometerStream::parse("0101", Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(ThermometerStream::parse("011", Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(ThermometerStream::from_bits({true, false}, Rational(1)),
                  std::invalid_argument);
  // Index order: ones occupy the top indices.
  CHECK_NOTHROW(ThermometerStream::from_bits({false, true}, Rational(1)));
}

TEST_CASE("roundtrip is exact for every representable level") {
  for (std::int64_t length = 1; length <= 64; ++length) {
    for (const Rational& alpha : {Rational(1), Rational(1, 2), Rational(3, 7)}) {
      for (std::int64_t n = 0; n <= length; ++n) {
        const ThermometerStream s(length, n, alpha);
        const double v = decode(s);
        const auto back = encode(v, length, alpha);
        CHECK(back.ones() == n);
      }
    }
  }
}

TEST_CASE("quantization error bound") {
  const Rational alpha(1, 2);
  const std::int64_t length = 16;
  for (double v = -5.0; v <= 5.0; v += 0.01) {
    const double out = decode(encode(v, length, alpha));
    const double lo = -to_double(alpha) * static_cast<double>(length) / 2.0;
    const double hi = -lo;
    if (v >= lo && v <= hi) {
      CHECK(std::fabs(out - v) <= to_double(alpha) / 2.0 + 1e-12);
    } else {
      CHECK(out == (v < lo ? lo : hi));  // saturation
    }
  }
}

TEST_CASE("negate is complement plus reverse") {
  // Zero is self-negating.
  const auto zero = ThermometerStream::parse("10", Rational(1));
  CHECK(negate(zero) == zero);
  // Endpoints swap.
  CHECK(negate(ThermometerStream::parse("11", Rational(1))).to_text() == "00");
  // n -> L - n.
  const ThermometerStream s(8, 3, Rational(1));
  CHECK(negate(s).ones() == 5);

  // Bit-level route: complement every bit, then reverse the order.
  const auto bits = s.bits();
  std::vector<bool> flipped(bits.rbegin(), bits.rend());
  flipped.flip();
  const auto via_bits = ThermometerStream::from_bits(flipped, s.alpha());
  CHECK(via_bits == negate(s));

  // Involution, exhaustively.
  for (std::int64_t length = 1; length <= 64; ++length) {
    for (std::int64_t n = 0; n <= length; ++n) {
      const ThermometerStream t(length, n, Rational(2, 3));
      CHECK(negate(negate(t)) == t);
      CHECK(to_double(negate(t).value()) == -to_double(t.value()));
    }
  }
}

TEST_CASE("scale_by_constant divides the value exactly") {
  const auto s = encode(0.75, 8, Rational(1, 4));
  const auto scaled = scale_by_constant(s, Rational(3));
  CHECK(scaled.ones() == s.ones());
  CHECK(scaled.value() == Rational(1, 4));
  CHECK(decode(scale_by_constant(encode(0.0, 8, Rational(1)), Rational(7))) == 0.0);
  const auto neg = encode(-1.0, 2, Rational(1));
  CHECK(decode(scale_by_constant(neg, Rational(2))) == -0.5);
  CHECK_THROWS_AS(scale_by_constant(s, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(scale_by_constant(s, Rational(-1)), std::invalid_argument);
}

TEST_CASE("text form groups nibbles, first-to-flip bit first") {
  const ThermometerStream s(8, 3, Rational(1));
  CHECK(s.to_text() == "1110 0000");
  CHECK(s.to_text(false) == "11100000");
  CHECK(ThermometerStream::parse(s.to_text(), s.alpha()) == s);
}

TEST_CASE("an L-bit stream represents exactly L+1 values") {
  const std::int64_t length = 6;
  std::vector<double> values;
  for (std::int64_t n = 0; n <= length; ++n)
    values.push_back(decode(ThermometerStream(length, n, Rational(1, 3))));
  for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] > values[i - 1]);
}
