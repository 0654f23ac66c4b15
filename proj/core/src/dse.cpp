#include "scforge/dse.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace scforge {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::vector<std::int64_t> int_list(const nlohmann::json& j) {
  return j.get<std::vector<std::int64_t>>();
}

}  // namespace

nlohmann::json DseGrid::to_json() const {
  return nlohmann::json{
      {"m", m},
      {"b_x", b_x},
      {"alpha_x", to_string(alpha_x)},
      {"alpha_y_window", to_string(alpha_y_window)},
      {"b_y", b_y_values},
      {"s1", s1_values},
      {"s2", s2_values},
      {"k", k_values},
      {"subsample_mode",
       mode == SubsampleMode::kCentered ? "centered" : "floor"},
      {"first_iteration_special_case", first_iteration_special_case},
      {"eval",
       {{"dist", eval_dist.to_string()},
        {"count", eval_count},
        {"seed", eval_seed}}},
      {"cost_profile", cost_profile.to_json()},
  };
}

DseGrid DseGrid::from_json(const nlohmann::json& j) {
  DseGrid g = default_grid();
  if (j.contains("m")) g.m = j.at("m").get<std::int64_t>();
  if (j.contains("b_x")) g.b_x = j.at("b_x").get<std::int64_t>();
  if (j.contains("alpha_x"))
    g.alpha_x = parse_rational(j.at("alpha_x").get<std::string>());
  else
    g.alpha_x = SoftmaxConfig::default_alpha_x(g.b_x);
  if (j.contains("alpha_y_window"))
    g.alpha_y_window = parse_rational(j.at("alpha_y_window").get<std::string>());
  if (j.contains("b_y")) g.b_y_values = int_list(j.at("b_y"));
  if (j.contains("s1")) g.s1_values = int_list(j.at("s1"));
  if (j.contains("s2")) g.s2_values = int_list(j.at("s2"));
  if (j.contains("k")) g.k_values = int_list(j.at("k"));
  if (j.contains("subsample_mode"))
    g.mode = j.at("subsample_mode").get<std::string>() == "floor"
                 ? SubsampleMode::kHardwareFloor
                 : SubsampleMode::kCentered;
  if (j.contains("first_iteration_special_case"))
    g.first_iteration_special_case =
        j.at("first_iteration_special_case").get<bool>();
  if (j.contains("eval")) {
    const auto& e = j.at("eval");
    if (e.contains("dist"))
      g.eval_dist = Distribution::parse(e.at("dist").get<std::string>());
    if (e.contains("count")) g.eval_count = e.at("count").get<std::int64_t>();
    if (e.contains("seed")) g.eval_seed = e.at("seed").get<std::uint64_t>();
  }
  if (j.contains("cost_profile"))
    g.cost_profile = CostProfile::from_json(j.at("cost_profile"));
  if (g.b_y_values.empty() || g.s1_values.empty() || g.s2_values.empty() ||
      g.k_values.empty())
    throw std::invalid_argument("grid parameter lists must be non-empty");
  return g;
}

DseGrid default_grid() {
  DseGrid g;
  g.m = 8;
  g.b_x = 4;
  g.alpha_x = SoftmaxConfig::default_alpha_x(g.b_x);
  g.alpha_y_window = Rational(1);
  g.b_y_values = {4, 8, 16, 32};
  g.s1_values = {1, 2, 3, 4, 8, 16, 32, 64, 128};
  g.s2_values = {1, 2, 3, 4, 6, 8, 16, 32, 64};
  g.k_values = {1, 2, 3, 4, 5, 6, 8, 12, 16};
  g.mode = SubsampleMode::kCentered;
  g.first_iteration_special_case = true;
  g.eval_dist = Distribution::parse("gaussian:0:1:4");
  g.eval_count = 64;
  g.eval_seed = 1;
  return g;
}

std::vector<SoftmaxConfig> enumerate_grid(const DseGrid& grid) {
  std::vector<SoftmaxConfig> out;
  out.reserve(grid.size());
  for (std::int64_t b_y : grid.b_y_values) {
    for (std::int64_t s1 : grid.s1_values) {
      for (std::int64_t s2 : grid.s2_values) {
        for (std::int64_t k : grid.k_values) {
          SoftmaxConfig cfg;
          cfg.m = grid.m;
          cfg.k = k;
          cfg.b_x = grid.b_x;
          cfg.b_y = b_y;
          cfg.alpha_x = grid.alpha_x;
          cfg.alpha_y = SoftmaxConfig::default_alpha_y(b_y, grid.alpha_y_window);
          cfg.s1 = s1;
          cfg.s2 = s2;
          cfg.mode = grid.mode;
          cfg.first_iteration_special_case = grid.first_iteration_special_case;
          out.push_back(cfg);
        }
      }
    }
  }
  return out;
}

std::vector<DsePoint> evaluate_grid(const DseGrid& grid, int threads) {
  const auto configs = enumerate_grid(grid);
  const auto vectors =
      gen_vectors(grid.eval_dist, grid.m, grid.eval_count, grid.eval_seed);

  std::vector<DsePoint> points(configs.size());
  auto evaluate_one = [&](std::size_t i) {
    DsePoint& p = points[i];
    p.index = static_cast<std::int64_t>(i);
    p.cfg = configs[i];
    const DatapathPlan plan = plan_softmax(p.cfg);
    if (!plan.realizable) {
      p.realizable = false;
      p.reason = plan.reason;
      return;
    }
    p.realizable = true;
    p.cost = cost_softmax(p.cfg, grid.cost_profile);
    p.mae = mae_softmax(p.cfg, vectors, grid.eval_dist, grid.eval_seed).mae;
  };

  int worker_count = threads;
  if (worker_count <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    worker_count = hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
  }
  if (worker_count <= 1 || configs.size() < 2) {
    for (std::size_t i = 0; i < configs.size(); ++i) evaluate_one(i);
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk =
        (configs.size() + static_cast<std::size_t>(worker_count) - 1) /
        static_cast<std::size_t>(worker_count);
    for (int w = 0; w < worker_count; ++w) {
      const std::size_t begin = static_cast<std::size_t>(w) * chunk;
      const std::size_t end = std::min(begin + chunk, configs.size());
      if (begin >= end) break;
      workers.emplace_back([&, begin, end]() {
        for (std::size_t i = begin; i < end; ++i) evaluate_one(i);
      });
    }
    for (auto& t : workers) t.join();
  }

  pareto_front(points);
  return points;
}

std::vector<std::size_t> pareto_front(std::vector<DsePoint>& points) {
  struct Key {
    std::int64_t adp;
    double mae;
    std::size_t pos;
  };
  std::vector<Key> keys;
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].on_front = false;
    if (points[i].realizable)
      keys.push_back({points[i].cost.adp_proxy, points[i].mae, i});
  }
  if (keys.empty())
    throw std::invalid_argument("no realizable point in the design space");
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.adp != b.adp) return a.adp < b.adp;
    if (a.mae != b.mae) return a.mae < b.mae;
    return a.pos < b.pos;
  });

  std::vector<std::size_t> front;
  double best_mae = std::numeric_limits<double>::infinity();
  for (const Key& key : keys) {
    if (key.mae < best_mae) {
      best_mae = key.mae;
      points[key.pos].on_front = true;
      front.push_back(key.pos);
    }
  }
  std::sort(front.begin(), front.end());
  return front;
}

void write_results_csv(std::span<const DsePoint> points, const std::string& path,
                       const std::string& manifest_digest) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# manifest_digest=" << manifest_digest << "\n";
  out << "index,b_y,s1,s2,k,realizable,reason,gate_count,depth,adp_proxy,mae,"
         "on_front\n";
  for (const auto& p : points) {
    out << p.index << ',' << p.cfg.b_y << ',' << p.cfg.s1 << ',' << p.cfg.s2
        << ',' << p.cfg.k << ',' << (p.realizable ? 1 : 0) << ','
        << csv_quote(p.reason) << ',';
    if (p.realizable) {
      out << p.cost.gate_count << ',' << p.cost.depth << ',' << p.cost.adp_proxy
          << ',' << format_double(p.mae);
    } else {
      out << ",,,";
    }
    out << ',' << (p.on_front ? 1 : 0) << "\n";
  }
}

nlohmann::json front_to_json(std::span<const DsePoint> points,
                             const std::string& manifest_digest) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points) {
    if (!p.on_front) continue;
    arr.push_back(nlohmann::json{
        {"index", p.index},
        {"b_y", p.cfg.b_y},
        {"s1", p.cfg.s1},
        {"s2", p.cfg.s2},
        {"k", p.cfg.k},
        {"adp_proxy", p.cost.adp_proxy},
        {"mae", p.mae},
    });
  }
  return nlohmann::json{{"manifest_digest", manifest_digest}, {"front", arr}};
}

}  // namespace scforge
