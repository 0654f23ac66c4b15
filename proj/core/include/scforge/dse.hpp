#pragma once

// Design-space exploration over the softmax parameters: enumerate a grid in
// deterministic lexicographic order, evaluate (cost proxy, MAE) per point,
// and extract the non-dominated Pareto front. Unrealizable width combinations
// are kept in the result set with the rejecting constraint recorded.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scforge/cost.hpp"
#include "scforge/eval.hpp"
#include "scforge/softmax.hpp"

namespace scforge {

struct DseGrid {
  std::int64_t m = 8;
  std::int64_t b_x = 4;
  Rational alpha_x{2, 1};
  Rational alpha_y_window{1, 1};  // alpha_y = 2*window / B_y
  std::vector<std::int64_t> b_y_values;
  std::vector<std::int64_t> s1_values;
  std::vector<std::int64_t> s2_values;
  std::vector<std::int64_t> k_values;
  SubsampleMode mode = SubsampleMode::kCentered;
  bool first_iteration_special_case = true;
  Distribution eval_dist = Distribution{};  // gaussian by default, see default_grid
  std::int64_t eval_count = 64;
  std::uint64_t eval_seed = 1;
  CostProfile cost_profile;

  std::size_t size() const {
    return b_y_values.size() * s1_values.size() * s2_values.size() *
           k_values.size();
  }

  nlohmann::json to_json() const;
  static DseGrid from_json(const nlohmann::json& j);
};

/// The documented default: 4 x 9 x 9 x 9 = 2916 design points.
DseGrid default_grid();

/// Cartesian product in lexicographic (b_y, s1, s2, k) order.
std::vector<SoftmaxConfig> enumerate_grid(const DseGrid& grid);

struct DsePoint {
  std::int64_t index = 0;
  SoftmaxConfig cfg;
  bool realizable = false;
  std::string reason;
  CostReport cost;   // valid when realizable
  double mae = 0.0;  // valid when realizable
  bool on_front = false;
};

/// Evaluates every grid point against one shared vector set. `threads` <= 0
/// picks a hardware-based default; output order and contents are independent
/// of the worker count.
std::vector<DsePoint> evaluate_grid(const DseGrid& grid, int threads = 0);

/// Marks and returns the indices (into `points`) of the minimal non-dominated
/// set under (adp_proxy, mae), keeping the lexicographically-first config on
/// exact ties. Throws std::invalid_argument if no point is realizable.
std::vector<std::size_t> pareto_front(std::vector<DsePoint>& points);

void write_results_csv(std::span<const DsePoint> points, const std::string& path,
                       const std::string& manifest_digest);
nlohmann::json front_to_json(std::span<const DsePoint> points,
                             const std::string& manifest_digest);

}  // namespace scforge
