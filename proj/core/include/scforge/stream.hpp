#pragma once

// Thermometer-coded stochastic number: an L-bit vector in which all ones sit
// at one end, plus an exact rational scale alpha. Bit index L-1 flips first
// as the encoded value grows, so a stream is fully described by (L, n, alpha)
// with n = ones count, and decodes to alpha * (n - L/2).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scforge/rational.hpp"

namespace scforge {

class ThermometerStream {
 public:
  /// Builds the stream with the given ones count. Throws on length < 1,
  /// ones outside [0, length], or alpha <= 0.
  ThermometerStream(std::int64_t length, std::int64_t ones, Rational alpha);

  /// Validates the thermometer shape of an index-ordered bit vector
  /// (bits[length-1] is the first bit to flip). Throws on non-thermometer
  /// patterns: those can only come from an upstream logic bug.
  static ThermometerStream from_bits(const std::vector<bool>& bits, Rational alpha);

  /// Parses the debug text form, first-to-flip bit first ("1110 0000").
  static ThermometerStream parse(std::string_view text, Rational alpha);

  std::int64_t length() const { return length_; }
  std::int64_t ones() const { return ones_; }
  const Rational& alpha() const { return alpha_; }

  /// Exact decoded value alpha * (n - L/2).
  Rational value() const { return alpha_ * Rational(2 * ones_ - length_, 2); }
  double value_as_double() const { return to_double(value()); }

  /// Bit at vector index i; ones occupy indices [L-n, L-1].
  bool bit(std::int64_t index) const;
  std::vector<bool> bits() const;

  /// First-to-flip bit first, optionally grouped in nibbles: "1110 0000".
  std::string to_text(bool grouped = true) const;

  bool operator==(const ThermometerStream& other) const = default;

 private:
  std::int64_t length_;
  std::int64_t ones_;
  Rational alpha_;
};

/// Saturating round-to-nearest encode (ties away from zero):
/// n = clamp(round(value/alpha + L/2), 0, L).
ThermometerStream encode(double value, std::int64_t length, const Rational& alpha);

/// Same grid placement but with an exact rational input; used wherever the
/// datapath must stay bit-exact end to end.
ThermometerStream encode_exact(const Rational& value, std::int64_t length,
                               const Rational& alpha);

double decode(const ThermometerStream& s);

/// Complement every bit, then reverse: n -> L - n. Exact negation.
ThermometerStream negate(const ThermometerStream& s);

/// Divide the decoded value by c > 0 by scaling alpha; bits are untouched.
ThermometerStream scale_by_constant(const ThermometerStream& s, const Rational& c);

}  // namespace scforge
