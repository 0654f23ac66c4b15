#include "scforge/stream.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scforge {

ThermometerStream::ThermometerStream(std::int64_t length, std::int64_t ones,
                                     Rational alpha)
    : length_(length), ones_(ones), alpha_(alpha) {
  if (length < 1) throw std::invalid_argument("stream length must be >= 1");
  if (ones < 0 || ones > length)
    throw std::invalid_argument("ones count outside [0, length]");
  if (alpha <= Rational(0)) throw std::invalid_argument("alpha must be positive");
}

ThermometerStream ThermometerStream::from_bits(const std::vector<bool>& bits,
                                               Rational alpha) {
  const auto length = static_cast<std::int64_t>(bits.size());
  if (length < 1) throw std::invalid_argument("stream length must be >= 1");
  std::int64_t ones = 0;
  for (bool b : bits) ones += b ? 1 : 0;
  for (std::int64_t i = 0; i < length; ++i) {
    const bool expected = i >= length - ones;
    if (bits[static_cast<std::size_t>(i)] != expected)
      throw std::invalid_argument("bit pattern is not thermometer-coded");
  }
  return {length, ones, alpha};
}

ThermometerStream ThermometerStream::parse(std::string_view text, Rational alpha) {
  std::vector<bool> flip_first;
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '\'') continue;
    if (c == '0')
      flip_first.push_back(false);
    else if (c == '1')
      flip_first.push_back(true);
    else
      throw std::invalid_argument("stream text may contain only 0, 1 and spaces");
  }
  // Text order is the reverse of index order.
  std::vector<bool> bits(flip_first.rbegin(), flip_first.rend());
  return from_bits(bits, alpha);
}

bool ThermometerStream::bit(std::int64_t index) const {
  if (index < 0 || index >= length_) throw std::out_of_range("bit index");
  return index >= length_ - ones_;
}

std::vector<bool> ThermometerStream::bits() const {
  std::vector<bool> out(static_cast<std::size_t>(length_));
  for (std::int64_t i = 0; i < length_; ++i)
    out[static_cast<std::size_t>(i)] = i >= length_ - ones_;
  return out;
}

std::string ThermometerStream::to_text(bool grouped) const {
  std::string out;
  for (std::int64_t pos = 0; pos < length_; ++pos) {
    if (grouped && pos > 0 && pos % 4 == 0) out.push_back(' ');
    out.push_back(pos < ones_ ? '1' : '0');
  }
  return out;
}

ThermometerStream encode(double value, std::int64_t length, const Rational& alpha) {
  if (length < 1) throw std::invalid_argument("stream length must be >= 1");
  if (alpha <= Rational(0)) throw std::invalid_argument("alpha must be positive");
  const double shifted = value / to_double(alpha) + static_cast<double>(length) / 2.0;
  auto n = static_cast<std::int64_t>(std::llround(shifted));
  n = std::clamp<std::int64_t>(n, 0, length);
  return {length, n, alpha};
}

ThermometerStream encode_exact(const Rational& value, std::int64_t length,
                               const Rational& alpha) {
  if (length < 1) throw std::invalid_argument("stream length must be >= 1");
  if (alpha <= Rational(0)) throw std::invalid_argument("alpha must be positive");
  std::int64_t n = round_half_away(value / alpha + Rational(length, 2));
  n = std::clamp<std::int64_t>(n, 0, length);
  return {length, n, alpha};
}

double decode(const ThermometerStream& s) { return s.value_as_double(); }

ThermometerStream negate(const ThermometerStream& s) {
  return {s.length(), s.length() - s.ones(), s.alpha()};
}

ThermometerStream scale_by_constant(const ThermometerStream& s, const Rational& c) {
  if (c <= Rational(0)) throw std::invalid_argument("scale constant must be positive");
  return {s.length(), s.ones(), s.alpha() / c};
}

}  // namespace scforge
