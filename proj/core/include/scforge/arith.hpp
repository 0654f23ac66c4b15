#pragma once

// Deterministic SC arithmetic on thermometer streams: exact truth-table
// multiplication, exact addition by sorting-network concatenation, and the
// sub-sampling / scale-alignment blocks used to trade precision for width.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "scforge/stream.hpp"

namespace scforge {

/// Raised when a datapath cannot be wired for a parameter choice (sub-sample
/// rate not dividing a width, non-integer scale ratio, odd summation input).
class UnrealizableError : public std::runtime_error {
 public:
  explicit UnrealizableError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural record of one bitonic sorting network instance.
struct BsnTrace {
  std::int64_t total_bits = 0;
  std::int64_t stage_count = 0;
  std::int64_t compare_exchange_count = 0;
};

/// Stage count lg(N)*(lg(N)+1)/2 for a power-of-two N.
std::int64_t bitonic_stage_count(std::int64_t total_bits);
/// Compare-exchange count (N/2) * stage_count.
std::int64_t bitonic_compare_exchange_count(std::int64_t total_bits);

/// Exact product: L_out = La*Lb/2, alpha_out = alpha_a*alpha_b, and the output
/// level is exactly the product of the input levels (|la*lb| <= L_out/2, so
/// the format never saturates). Inputs must have even length >= 2.
ThermometerStream multiply(const ThermometerStream& a, const ThermometerStream& b);

struct BsnAddResult {
  ThermometerStream sum;
  BsnTrace trace;
};

/// Exact sum: concatenates the inputs (all with identical alpha), pads to a
/// power of two with zero-valued "half ones" filler and sorts ones-first.
/// Requires >= 2 inputs and an even total width (odd totals cannot be padded
/// with exact zeros); throws UnrealizableError otherwise.
BsnAddResult bsn_add(std::span<const ThermometerStream> inputs);
BsnAddResult bsn_add(std::initializer_list<ThermometerStream> inputs);

enum class SubsampleMode {
  kHardwareFloor,  // keep every rate-th bit: n' = floor(n / rate)
  kCentered,       // offset taps: n' = floor((n + rate/2) / rate)
};

/// Width reduction by an integer rate dividing L: L' = L/rate and
/// alpha' = alpha*rate. Floor mode errs in [-alpha*(rate-1), 0]; centered
/// mode keeps |error| <= alpha*rate/2.
ThermometerStream subsample(const ThermometerStream& s, std::int64_t rate,
                            SubsampleMode mode);

/// Brings two streams to the larger of their two scales by centered
/// sub-sampling of the finer one. The scale ratio must reduce to an integer
/// rate that divides the finer stream's length; otherwise UnrealizableError.
std::pair<ThermometerStream, ThermometerStream> align_scales(
    const ThermometerStream& a, const ThermometerStream& b);

}  // namespace scforge
