#pragma once

// Gate-assisted selective interconnect: computes an arbitrary scalar function
// of a thermometer stream exactly on the output quantization grid. Each output
// bit is driven by selection signals s_t = "input ones count >= t" (a tap of
// input bit index B_in - t) combined through a handful of assist gates. Plain
// bit selection covers monotone targets; non-monotone profiles are decomposed
// into intervals realized as (s_rise AND NOT s_fall) terms ORed together.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scforge/stream.hpp"

namespace scforge {

/// One maximal run of ones in an output-bit profile: active for ones counts
/// n in [rise, fall). A missing fall means the run extends to n = B_in.
struct SiInterval {
  std::int64_t rise = 0;
  std::optional<std::int64_t> fall;

  bool operator==(const SiInterval&) const = default;
};

/// Gate plan for one output bit, rank r (the bit is 1 iff level >= r).
struct SiOutputBit {
  std::int64_t rank = 0;
  std::optional<bool> constant;     // profile constant 0 or 1: no logic at all
  std::vector<SiInterval> intervals;

  bool operator==(const SiOutputBit&) const = default;
};

struct SiGateSummary {
  std::int64_t not_gates = 0;  // one per fall threshold
  std::int64_t and_gates = 0;  // one per interval with both a tap rise and a fall
  std::int64_t or_gates = 0;   // intervals - 1 per multi-interval bit
  std::int64_t total() const { return not_gates + and_gates + or_gates; }
};

class SiConfig {
 public:
  SiConfig(std::int64_t b_in, std::int64_t b_out, Rational alpha_in,
           Rational alpha_out, std::vector<std::int64_t> level_table,
           std::vector<SiOutputBit> bits);

  std::int64_t b_in() const { return b_in_; }
  std::int64_t b_out() const { return b_out_; }
  const Rational& alpha_in() const { return alpha_in_; }
  const Rational& alpha_out() const { return alpha_out_; }
  const std::vector<std::int64_t>& level_table() const { return level_table_; }
  const std::vector<SiOutputBit>& output_bits() const { return bits_; }

  /// Input bit index carrying the selection signal "n >= threshold".
  std::int64_t tap_index(std::int64_t threshold) const { return b_in_ - threshold; }

  SiGateSummary gate_summary() const;

  /// Evaluates the gate network literally on an index-ordered bit vector and
  /// returns the produced output level. Used as the independent route against
  /// the level table; throws if the gates yield a non-thermometer output.
  std::int64_t evaluate_bits(const std::vector<bool>& input_bits) const;

  nlohmann::json to_json() const;
  static SiConfig from_json(const nlohmann::json& j);

 private:
  std::int64_t b_in_;
  std::int64_t b_out_;
  Rational alpha_in_;
  Rational alpha_out_;
  std::vector<std::int64_t> level_table_;
  std::vector<SiOutputBit> bits_;
};

/// Output level for every input ones count:
/// t(n) = clamp(round(f(alpha_in*(n - B_in/2)) / alpha_out + B_out/2), 0, B_out).
std::vector<std::int64_t> target_profile(const std::function<double(double)>& f,
                                         std::int64_t b_in, std::int64_t b_out,
                                         const Rational& alpha_in,
                                         const Rational& alpha_out);

/// Builds the interconnect plus assist gates realizing target_profile exactly.
/// Rejects b_out > b_in (no injective tap assignment guaranteed).
SiConfig synthesize(const std::function<double(double)>& f, std::int64_t b_in,
                    std::int64_t b_out, const Rational& alpha_in,
                    const Rational& alpha_out);

/// Applies the block: output ones count is exactly level_table[input ones].
/// Deterministic, fluctuation-free; rejects shape or scale mismatches.
ThermometerStream si_apply(const SiConfig& cfg, const ThermometerStream& x);

}  // namespace scforge
