#include "scforge/arith.hpp"

#include <bit>

namespace scforge {

namespace {

std::int64_t log2_exact(std::int64_t n) {
  return std::bit_width(static_cast<std::uint64_t>(n)) - 1;
}

std::int64_t next_pow2(std::int64_t n) {
  return static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(n)));
}

}  // namespace

std::int64_t bitonic_stage_count(std::int64_t total_bits) {
  if (total_bits < 2 || !std::has_single_bit(static_cast<std::uint64_t>(total_bits)))
    throw std::invalid_argument("bitonic network size must be a power of two >= 2");
  const std::int64_t l = log2_exact(total_bits);
  return l * (l + 1) / 2;
}

std::int64_t bitonic_compare_exchange_count(std::int64_t total_bits) {
  return total_bits / 2 * bitonic_stage_count(total_bits);
}

ThermometerStream multiply(const ThermometerStream& a, const ThermometerStream& b) {
  if (a.length() < 2 || b.length() < 2)
    throw std::invalid_argument("multiply needs operand lengths >= 2");
  if (a.length() % 2 != 0 || b.length() % 2 != 0)
    throw std::invalid_argument("multiply needs even operand lengths");
  const std::int64_t la = a.ones() - a.length() / 2;
  const std::int64_t lb = b.ones() - b.length() / 2;
  const std::int64_t out_length = a.length() * b.length() / 2;
  const std::int64_t out_level = la * lb;  // |la*lb| <= out_length/2 by format
  return {out_length, out_level + out_length / 2, a.alpha() * b.alpha()};
}

BsnAddResult bsn_add(std::span<const ThermometerStream> inputs) {
  if (inputs.size() < 2)
    throw std::invalid_argument("bsn_add needs at least two inputs");
  const Rational alpha = inputs[0].alpha();
  std::int64_t total = 0;
  std::int64_t ones = 0;
  for (const auto& s : inputs) {
    if (s.alpha() != alpha)
      throw std::invalid_argument("bsn_add inputs must share one scale; align first");
    total += s.length();
    ones += s.ones();
  }
  if (total % 2 != 0)
    throw UnrealizableError("summation input width " + std::to_string(total) +
                            " is odd; zero-valued padding is impossible");
  const std::int64_t padded = next_pow2(total);
  const std::int64_t pad = padded - total;  // even: padded and total are even
  ones += pad / 2;                          // "10"-style filler decodes to zero
  BsnTrace trace{padded, bitonic_stage_count(padded),
                 bitonic_compare_exchange_count(padded)};
  return {ThermometerStream(padded, ones, alpha), trace};
}

BsnAddResult bsn_add(std::initializer_list<ThermometerStream> inputs) {
  return bsn_add(std::span<const ThermometerStream>(inputs.begin(), inputs.size()));
}

ThermometerStream subsample(const ThermometerStream& s, std::int64_t rate,
                            SubsampleMode mode) {
  if (rate < 1) throw std::invalid_argument("sub-sample rate must be >= 1");
  if (s.length() % rate != 0)
    throw UnrealizableError("sub-sample rate " + std::to_string(rate) +
                            " does not divide stream length " +
                            std::to_string(s.length()));
  const std::int64_t out_length = s.length() / rate;
  const std::int64_t n = s.ones();
  const std::int64_t out_ones =
      mode == SubsampleMode::kHardwareFloor ? n / rate : (n + rate / 2) / rate;
  return {out_length, std::min(out_ones, out_length), s.alpha() * Rational(rate)};
}

std::pair<ThermometerStream, ThermometerStream> align_scales(
    const ThermometerStream& a, const ThermometerStream& b) {
  if (a.alpha() == b.alpha()) return {a, b};
  const bool a_finer = a.alpha() < b.alpha();
  const ThermometerStream& fine = a_finer ? a : b;
  const ThermometerStream& coarse = a_finer ? b : a;
  const Rational ratio = coarse.alpha() / fine.alpha();
  if (!is_integer(ratio))
    throw UnrealizableError("scale ratio " + to_string(ratio) +
                            " is not an integer sub-sample rate");
  ThermometerStream adjusted =
      subsample(fine, ratio.numerator(), SubsampleMode::kCentered);
  if (a_finer) return {adjusted, b};
  return {a, adjusted};
}

}  // namespace scforge
