#pragma once

// Analytical relative hardware-cost proxy. Absolute synthesized area/delay
// depend on a standard-cell library and are out of scope; this model counts
// two-input-gate equivalents and logic levels so that comparisons and Pareto
// geometry are meaningful. Per-primitive gate weights can be overridden from
// a JSON profile.

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "scforge/si.hpp"
#include "scforge/softmax.hpp"

namespace scforge {

struct CostProfile {
  // Compare-exchange on bits: one AND + one OR.
  std::int64_t ce_gates = 2;
  // Truth-table multiplier: gate-equivalents per table entry.
  std::int64_t mult_gate_per_entry = 1;
  // Requantizer: ones-counter adder cells and threshold comparators.
  std::int64_t requant_adder_gates = 5;
  std::int64_t requant_cmp_gate_per_bit = 1;
  // Sub-samplers are tap selections: wires by default.
  std::int64_t subsample_tap_gates = 0;

  static CostProfile from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct CostEntry {
  std::int64_t gates = 0;
  std::int64_t depth = 0;
};

struct CostReport {
  std::int64_t gate_count = 0;
  std::int64_t depth = 0;
  std::int64_t adp_proxy = 0;  // gate_count * depth
  std::map<std::string, CostEntry> breakdown;  // gate columns sum to the total

  nlohmann::json to_json() const;
};

/// Bitonic sorting network over a power-of-two number of bits.
CostReport cost_bsn(std::int64_t total_bits, const CostProfile& profile = {});

/// Selective-interconnect block: taps are wires; only assist gates count.
CostReport cost_si(const SiConfig& cfg, const CostProfile& profile = {});

/// Full iterative softmax block: per-lane multipliers, requantizers, the two
/// summation networks and the sub-samplers, unrolled k times. Throws
/// UnrealizableError when the width bookkeeping rejects the config.
CostReport cost_softmax(const SoftmaxConfig& cfg, const CostProfile& profile = {});

}  // namespace scforge
