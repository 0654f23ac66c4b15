#pragma once

// Iterative approximate softmax: the floating-point recurrence
//   y0 = 1/m;  y <- y + [x*y - y*sum(x*y)] / k   (k steps)
// and a bit-exact thermometer-stream datapath computing the same update with
// one global summation network and per-lane multiply / rescale / accumulate
// blocks. All stream widths and scales are planned symbolically first, so an
// unrealizable parameter choice is rejected with the failing constraint named.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scforge/arith.hpp"
#include "scforge/stream.hpp"

namespace scforge {

enum class AlphaMode {
  kFixed,     // state requantized to (B_y, alpha_y) after every iteration
  kAdaptive,  // per-iteration dyadic scale fitted to the observed state range
};

struct SoftmaxConfig {
  std::int64_t m = 8;       // row-vector length
  std::int64_t k = 1;       // iteration count
  std::int64_t b_x = 8;     // input stream width
  std::int64_t b_y = 64;    // state stream width
  Rational alpha_x{1, 1};   // input scale
  Rational alpha_y{1, 32};  // state scale
  std::int64_t s1 = 1;      // sub-sample rate after the global summation
  std::int64_t s2 = 1;      // sub-sample rate after the second multiplier
  SubsampleMode mode = SubsampleMode::kCentered;
  bool first_iteration_special_case = true;
  AlphaMode alpha_mode = AlphaMode::kFixed;

  /// Throws std::invalid_argument on malformed parameters (m < 2, k < 1,
  /// odd widths, non-positive scales or rates).
  void validate() const;

  /// Conventional defaults: alpha_x spans [-4, 4], alpha_y spans
  /// [-window, window].
  static Rational default_alpha_x(std::int64_t b_x) { return {8, b_x}; }
  static Rational default_alpha_y(std::int64_t b_y, const Rational& window = 1) {
    return Rational(2) * window / Rational(b_y);
  }

  nlohmann::json to_json() const;
  static SoftmaxConfig from_json(const nlohmann::json& j);
};

/// Geometry of one datapath iteration, fully determined by the config.
struct IterationPlan {
  bool special = false;        // first iteration with y0 folded into the scale
  std::int64_t y_width = 0;    // incoming state width
  Rational y_alpha{1, 1};      // incoming state scale
  std::int64_t z_width = 0;    // per-lane product width
  Rational z_alpha{1, 1};
  std::int64_t sum_input_width = 0;   // global network width (padded)
  std::int64_t sum_width = 0;         // after s1
  Rational sum_alpha{1, 1};
  std::int64_t w_width = 0;           // y*sum(z) path after s2 (or rescale)
  Rational w_alpha{1, 1};
  std::int64_t rate_z = 1, rate_w = 1, rate_y = 1;  // alignment rates
  Rational common_alpha{1, 1};        // scale entering the accumulation network
  std::int64_t acc_input_width = 0;   // accumulation network width (padded)
  std::int64_t mult1_entries = 0;     // truth-table sizes, for the cost model
  std::int64_t mult2_entries = 0;
};

struct DatapathPlan {
  bool realizable = false;
  std::string reason;          // first failing constraint when unrealizable
  IterationPlan first;         // iteration 1 (special or generic)
  IterationPlan generic;       // steady-state iteration geometry
  bool has_special = false;
};

DatapathPlan plan_softmax(const SoftmaxConfig& cfg);

/// Algorithm oracle in doubles. Requires len(x) >= 2, k >= 1.
std::vector<double> float_iterative_softmax(std::span<const double> x, std::int64_t k);

/// All states y^0 .. y^k of the recurrence (k+1 rows).
std::vector<std::vector<double>> float_iterative_history(std::span<const double> x,
                                                         std::int64_t k);

/// Decode-reencode onto a (length, alpha) grid; error <= alpha/2 or saturation.
ThermometerStream requantize(const ThermometerStream& s, std::int64_t length,
                             const Rational& alpha);

/// Runs the stream datapath. Inputs must be m streams of shape (b_x, alpha_x).
/// Throws UnrealizableError naming the failing constraint if the config cannot
/// be wired.
std::vector<ThermometerStream> sc_softmax(std::span<const ThermometerStream> x,
                                          const SoftmaxConfig& cfg);

/// Encodes a real vector into the config's input format.
std::vector<ThermometerStream> encode_softmax_input(std::span<const double> x,
                                                    const SoftmaxConfig& cfg);

}  // namespace scforge
