#include "scforge/cost.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace scforge {

namespace {

std::int64_t ceil_log2(std::int64_t n) {
  if (n <= 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(n - 1));
}

void finalize(CostReport* report) {
  report->gate_count = 0;
  for (const auto& [name, entry] : report->breakdown) report->gate_count += entry.gates;
  report->adp_proxy = report->gate_count * report->depth;
}

CostEntry multiplier_cost(std::int64_t entries, const CostProfile& p) {
  if (entries == 0) return {0, 0};
  return {entries * p.mult_gate_per_entry, ceil_log2(entries)};
}

CostEntry requantizer_cost(std::int64_t input_width, const CostProfile& p) {
  const std::int64_t count_bits = ceil_log2(input_width + 1);
  const std::int64_t gates = (input_width - 1) * p.requant_adder_gates +
                             count_bits * p.requant_cmp_gate_per_bit;
  return {gates, 2 * ceil_log2(input_width) + 1};
}

}  // namespace

CostProfile CostProfile::from_json(const nlohmann::json& j) {
  CostProfile p;
  if (j.contains("ce_gates")) p.ce_gates = j.at("ce_gates").get<std::int64_t>();
  if (j.contains("mult_gate_per_entry"))
    p.mult_gate_per_entry = j.at("mult_gate_per_entry").get<std::int64_t>();
  if (j.contains("requant_adder_gates"))
    p.requant_adder_gates = j.at("requant_adder_gates").get<std::int64_t>();
  if (j.contains("requant_cmp_gate_per_bit"))
    p.requant_cmp_gate_per_bit = j.at("requant_cmp_gate_per_bit").get<std::int64_t>();
  if (j.contains("subsample_tap_gates"))
    p.subsample_tap_gates = j.at("subsample_tap_gates").get<std::int64_t>();
  return p;
}

nlohmann::json CostProfile::to_json() const {
  return nlohmann::json{{"ce_gates", ce_gates},
                        {"mult_gate_per_entry", mult_gate_per_entry},
                        {"requant_adder_gates", requant_adder_gates},
                        {"requant_cmp_gate_per_bit", requant_cmp_gate_per_bit},
                        {"subsample_tap_gates", subsample_tap_gates}};
}

nlohmann::json CostReport::to_json() const {
  nlohmann::json bd = nlohmann::json::object();
  for (const auto& [name, entry] : breakdown)
    bd[name] = {{"gates", entry.gates}, {"depth", entry.depth}};
  return nlohmann::json{{"gate_count", gate_count},
                        {"depth", depth},
                        {"adp_proxy", adp_proxy},
                        {"breakdown", bd}};
}

CostReport cost_bsn(std::int64_t total_bits, const CostProfile& profile) {
  const std::int64_t stages = bitonic_stage_count(total_bits);  // validates
  const std::int64_t ce = bitonic_compare_exchange_count(total_bits);
  CostReport report;
  report.breakdown["compare_exchange"] = {ce * profile.ce_gates, stages};
  report.depth = stages;
  finalize(&report);
  return report;
}

CostReport cost_si(const SiConfig& cfg, const CostProfile& profile) {
  (void)profile;
  const SiGateSummary g = cfg.gate_summary();
  std::int64_t max_terms = 1;
  for (const auto& bit : cfg.output_bits())
    max_terms = std::max(max_terms, static_cast<std::int64_t>(bit.intervals.size()));
  CostReport report;
  report.breakdown["assist_gates"] = {g.total(), 0};
  report.depth = g.total() == 0 ? 0 : 1 + ceil_log2(max_terms);
  report.breakdown["assist_gates"].depth = report.depth;
  finalize(&report);
  return report;
}

CostReport cost_softmax(const SoftmaxConfig& cfg, const CostProfile& profile) {
  DatapathPlan plan = plan_softmax(cfg);
  if (!plan.realizable) throw UnrealizableError(plan.reason);
  const IterationPlan& it = plan.generic;

  // One iteration; the block is unrolled k times for full parallelism.
  const CostEntry m1 = multiplier_cost(it.mult1_entries, profile);
  const CostEntry m2 = multiplier_cost(it.mult2_entries, profile);
  const CostEntry rq = requantizer_cost(it.acc_input_width, profile);
  const std::int64_t bsn1_stages = bitonic_stage_count(it.sum_input_width);
  const std::int64_t bsn2_stages = bitonic_stage_count(it.acc_input_width);
  const CostEntry bsn1{bitonic_compare_exchange_count(it.sum_input_width) *
                           profile.ce_gates,
                       bsn1_stages};
  const CostEntry bsn2{bitonic_compare_exchange_count(it.acc_input_width) *
                           profile.ce_gates,
                       bsn2_stages};
  const std::int64_t tap_count = it.sum_width + it.w_width;
  const CostEntry subs{tap_count * profile.subsample_tap_gates, 0};

  CostReport report;
  const std::int64_t k = cfg.k;
  const std::int64_t m = cfg.m;
  report.breakdown["multiplier1"] = {k * m * m1.gates, m1.depth};
  report.breakdown["multiplier2"] = {k * m * m2.gates, m2.depth};
  report.breakdown["requantizer"] = {k * m * rq.gates, rq.depth};
  report.breakdown["bsn1"] = {k * bsn1.gates, bsn1.depth};
  report.breakdown["bsn2"] = {k * bsn2.gates, bsn2.depth};
  report.breakdown["subsamplers"] = {k * subs.gates, subs.depth};
  report.depth =
      k * (m1.depth + bsn1.depth + m2.depth + bsn2.depth + rq.depth + subs.depth);
  finalize(&report);
  return report;
}

}  // namespace scforge
