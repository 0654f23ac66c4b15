#include "scforge/softmax.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace scforge {

namespace {

std::int64_t next_pow2(std::int64_t n) {
  return static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(n)));
}

std::string mode_name(SubsampleMode m) {
  return m == SubsampleMode::kCentered ? "centered" : "floor";
}

SubsampleMode mode_from_name(const std::string& s) {
  if (s == "centered") return SubsampleMode::kCentered;
  if (s == "floor") return SubsampleMode::kHardwareFloor;
  throw std::invalid_argument("unknown sub-sample mode: " + s);
}

/// Integer alignment rate bringing `alpha` up to `target`, with the failing
/// constraint reported against `label`.
std::int64_t alignment_rate(const Rational& alpha, const Rational& target,
                            std::int64_t width, const std::string& label,
                            std::string* reason) {
  const Rational ratio = target / alpha;
  if (!is_integer(ratio)) {
    *reason = "aligning " + label + " needs scale ratio " + to_string(ratio) +
              ", which is not an integer sub-sample rate";
    return -1;
  }
  const std::int64_t rate = ratio.numerator();
  if (width % rate != 0) {
    *reason = "alignment rate " + std::to_string(rate) + " does not divide the " +
              std::to_string(width) + "-bit " + label + " stream";
    return -1;
  }
  return rate;
}

/// Fills one iteration's geometry; returns false with `reason` set when the
/// datapath cannot be wired.
bool plan_iteration(const SoftmaxConfig& cfg, bool special, IterationPlan* it,
                    std::string* reason) {
  it->special = special;
  it->y_width = cfg.b_y;
  it->y_alpha = special ? Rational(2) / (Rational(cfg.m) * Rational(cfg.b_y))
                        : cfg.alpha_y;

  // Multiplier 1: z_i = x_i * y_i.
  it->z_width = cfg.b_x * cfg.b_y / 2;
  it->z_alpha = cfg.alpha_x * it->y_alpha;
  it->mult1_entries = (cfg.b_x + 1) * (cfg.b_y + 1);

  // Global summation of the m products, padded to a power of two.
  const std::int64_t sum_total = cfg.m * it->z_width;
  it->sum_input_width = next_pow2(sum_total);
  if (it->sum_input_width % cfg.s1 != 0) {
    *reason = "s1=" + std::to_string(cfg.s1) + " does not divide the " +
              std::to_string(it->sum_input_width) + "-bit sum(z) network output";
    return false;
  }
  it->sum_width = it->sum_input_width / cfg.s1;
  it->sum_alpha = it->z_alpha * Rational(cfg.s1);

  if (special) {
    // y0*sum(z) is sum(z) divided by the constant m: a pure scale change.
    it->w_width = it->sum_width;
    it->w_alpha = it->sum_alpha / Rational(cfg.m);
    it->mult2_entries = 0;
  } else {
    if (it->sum_width < 2 || it->sum_width % 2 != 0) {
      *reason = "sum(z) narrows to " + std::to_string(it->sum_width) +
                " bits; the second multiplier needs an even width >= 2";
      return false;
    }
    const std::int64_t w_raw = cfg.b_y * it->sum_width / 2;
    it->mult2_entries = (cfg.b_y + 1) * (it->sum_width + 1);
    if (w_raw % cfg.s2 != 0) {
      *reason = "s2=" + std::to_string(cfg.s2) + " does not divide the " +
                std::to_string(w_raw) + "-bit y*sum(z) product";
      return false;
    }
    it->w_width = w_raw / cfg.s2;
    it->w_alpha = cfg.alpha_y * it->sum_alpha * Rational(cfg.s2);
  }

  // Division by the iteration count is free on the scales.
  const Rational zk_alpha = it->z_alpha / Rational(cfg.k);
  const Rational wk_alpha = it->w_alpha / Rational(cfg.k);

  // Common scale for the accumulation network.
  Rational target = std::max(zk_alpha, wk_alpha);
  if (!special) target = std::max(target, cfg.alpha_y);
  it->common_alpha = target;

  it->rate_z = alignment_rate(zk_alpha, target, it->z_width, "z", reason);
  if (it->rate_z < 0) return false;
  it->rate_w = alignment_rate(wk_alpha, target, it->w_width, "y*sum(z)", reason);
  if (it->rate_w < 0) return false;
  std::int64_t acc_total = it->z_width / it->rate_z + it->w_width / it->rate_w;
  if (!special) {
    it->rate_y = alignment_rate(cfg.alpha_y, target, cfg.b_y, "y", reason);
    if (it->rate_y < 0) return false;
    acc_total += cfg.b_y / it->rate_y;
  }
  if (acc_total % 2 != 0) {
    *reason = "accumulation input width " + std::to_string(acc_total) +
              " is odd; zero-valued padding is impossible";
    return false;
  }
  it->acc_input_width = next_pow2(acc_total);
  return true;
}

}  // namespace

void SoftmaxConfig::validate() const {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (b_x < 2 || b_x % 2 != 0)
    throw std::invalid_argument("B_x must be an even width >= 2");
  if (b_y < 2 || b_y % 2 != 0)
    throw std::invalid_argument("B_y must be an even width >= 2");
  if (alpha_x <= Rational(0) || alpha_y <= Rational(0))
    throw std::invalid_argument("scales must be positive");
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("sub-sample rates must be >= 1");
}

nlohmann::json SoftmaxConfig::to_json() const {
  return nlohmann::json{
      {"m", m},
      {"k", k},
      {"b_x", b_x},
      {"b_y", b_y},
      {"alpha_x", to_string(alpha_x)},
      {"alpha_y", to_string(alpha_y)},
      {"s1", s1},
      {"s2", s2},
      {"subsample_mode", mode_name(mode)},
      {"first_iteration_special_case", first_iteration_special_case},
      {"alpha_mode", alpha_mode == AlphaMode::kFixed ? "fixed" : "adaptive"},
  };
}

SoftmaxConfig SoftmaxConfig::from_json(const nlohmann::json& j) {
  SoftmaxConfig cfg;
  cfg.m = j.at("m").get<std::int64_t>();
  cfg.k = j.at("k").get<std::int64_t>();
  cfg.b_x = j.at("b_x").get<std::int64_t>();
  cfg.b_y = j.at("b_y").get<std::int64_t>();
  cfg.alpha_x = parse_rational(j.at("alpha_x").get<std::string>());
  cfg.alpha_y = parse_rational(j.at("alpha_y").get<std::string>());
  cfg.s1 = j.at("s1").get<std::int64_t>();
  cfg.s2 = j.at("s2").get<std::int64_t>();
  cfg.mode = mode_from_name(j.at("subsample_mode").get<std::string>());
  cfg.first_iteration_special_case = j.at("first_iteration_special_case").get<bool>();
  cfg.alpha_mode =
      j.at("alpha_mode").get<std::string>() == "adaptive" ? AlphaMode::kAdaptive
                                                          : AlphaMode::kFixed;
  return cfg;
}

DatapathPlan plan_softmax(const SoftmaxConfig& cfg) {
  cfg.validate();
  DatapathPlan plan;
  plan.has_special = cfg.first_iteration_special_case;

  std::string reason;
  if (!plan_iteration(cfg, false, &plan.generic, &reason)) {
    plan.reason = reason;
    return plan;
  }
  if (cfg.first_iteration_special_case) {
    if (!plan_iteration(cfg, true, &plan.first, &reason)) {
      plan.reason = reason;
      return plan;
    }
  } else {
    plan.first = plan.generic;
  }
  plan.realizable = true;
  return plan;
}

std::vector<double> float_iterative_softmax(std::span<const double> x,
                                            std::int64_t k) {
  return float_iterative_history(x, k).back();
}

std::vector<std::vector<double>> float_iterative_history(std::span<const double> x,
                                                         std::int64_t k) {
  const auto m = static_cast<std::int64_t>(x.size());
  if (m < 2) throw std::invalid_argument("need at least two elements");
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  std::vector<std::vector<double>> history;
  history.reserve(static_cast<std::size_t>(k) + 1);
  std::vector<double> y(x.size(), 1.0 / static_cast<double>(m));
  history.push_back(y);
  std::vector<double> z(x.size());
  for (std::int64_t j = 0; j < k; ++j) {
    double sum_z = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      z[i] = x[i] * y[i];
      sum_z += z[i];
    }
    for (std::size_t i = 0; i < x.size(); ++i)
      y[i] += (z[i] - y[i] * sum_z) / static_cast<double>(k);
    history.push_back(y);
  }
  return history;
}

ThermometerStream requantize(const ThermometerStream& s, std::int64_t length,
                             const Rational& alpha) {
  return encode_exact(s.value(), length, alpha);
}

namespace {

ThermometerStream requantize_with_bias(const ThermometerStream& s,
                                       std::int64_t length, const Rational& alpha,
                                       const Rational& bias) {
  if (bias == Rational(0)) return requantize(s, length, alpha);
  return encode_exact(s.value() + bias, length, alpha);
}

/// Smallest power of two (as an exact rational) >= r. Requires r > 0.
Rational dyadic_ceil(const Rational& r) {
  Rational p(1);
  if (p < r) {
    while (p < r) p *= Rational(2);
  } else {
    while (p / Rational(2) >= r) p /= Rational(2);
  }
  return p;
}

struct IterationResult {
  std::vector<ThermometerStream> y;
};

/// One datapath iteration. `y` carries the incoming state streams; in the
/// special first iteration they are the folded-constant all-ones streams and
/// the +y term enters through the requantizer bias instead of the network.
IterationResult run_iteration(const SoftmaxConfig& cfg,
                              std::span<const ThermometerStream> x,
                              std::span<const ThermometerStream> y, bool special,
                              const Rational& out_alpha_fixed, bool adaptive,
                              Rational* out_alpha_used) {
  const auto m = static_cast<std::size_t>(cfg.m);

  // Multiplier 1 and the global summation network.
  std::vector<ThermometerStream> z;
  z.reserve(m);
  for (std::size_t i = 0; i < m; ++i) z.push_back(multiply(x[i], y[i]));
  BsnAddResult sum = bsn_add(z);
  ThermometerStream sum_z = subsample(sum.sum, cfg.s1, cfg.mode);

  // y * sum(z): a real multiplier in the generic path, a free constant
  // division in the special first iteration (y0 identical across lanes).
  std::vector<ThermometerStream> w;
  w.reserve(m);
  if (special) {
    const ThermometerStream shared = scale_by_constant(sum_z, Rational(cfg.m));
    w.assign(m, shared);
  } else {
    for (std::size_t i = 0; i < m; ++i)
      w.push_back(subsample(multiply(y[i], sum_z), cfg.s2, cfg.mode));
  }

  // Bracket terms divided by k, negated where needed, aligned to one scale.
  const Rational k_rat(cfg.k);
  Rational target = std::max(z[0].alpha() / k_rat, w[0].alpha() / k_rat);
  if (!special) target = std::max(target, y[0].alpha());

  auto align_to = [&](const ThermometerStream& s,
                      const std::string& label) -> ThermometerStream {
    const Rational ratio = target / s.alpha();
    if (!is_integer(ratio))
      throw UnrealizableError("aligning " + label + " needs scale ratio " +
                              to_string(ratio) +
                              ", which is not an integer sub-sample rate");
    const std::int64_t rate = ratio.numerator();
    if (rate == 1) return s;
    return subsample(s, rate, SubsampleMode::kCentered);
  };

  std::vector<ThermometerStream> accumulated;
  accumulated.reserve(m);
  std::vector<ThermometerStream> acc_streams;
  for (std::size_t i = 0; i < m; ++i) {
    acc_streams.clear();
    acc_streams.push_back(align_to(scale_by_constant(z[i], k_rat), "z"));
    acc_streams.push_back(
        align_to(scale_by_constant(negate(w[i]), k_rat), "y*sum(z)"));
    if (!special) acc_streams.push_back(align_to(y[i], "y"));
    accumulated.push_back(bsn_add(acc_streams).sum);
  }

  // The folded first iteration re-enters the constant y0 = 1/m through the
  // requantizer thresholds, which is exact and free of extra stream width.
  const Rational bias = special ? Rational(1, cfg.m) : Rational(0);
  Rational out_alpha = out_alpha_fixed;
  if (adaptive) {
    // One shared dyadic scale per iteration, fitted to the state range.
    Rational peak(0);
    for (const auto& acc : accumulated) {
      Rational v = acc.value() + bias;
      if (v < Rational(0)) v = -v;
      peak = std::max(peak, v);
    }
    const Rational needed =
        Rational(2) * std::max(peak, Rational(1, 1024)) / Rational(cfg.b_y);
    out_alpha = dyadic_ceil(needed);
  }
  *out_alpha_used = out_alpha;

  IterationResult out;
  out.y.reserve(m);
  for (const auto& acc : accumulated)
    out.y.push_back(requantize_with_bias(acc, cfg.b_y, out_alpha, bias));
  return out;
}

}  // namespace

std::vector<ThermometerStream> encode_softmax_input(std::span<const double> x,
                                                    const SoftmaxConfig& cfg) {
  if (static_cast<std::int64_t>(x.size()) != cfg.m)
    throw std::invalid_argument("input vector length does not match m");
  std::vector<ThermometerStream> out;
  out.reserve(x.size());
  for (double v : x) out.push_back(encode(v, cfg.b_x, cfg.alpha_x));
  return out;
}

std::vector<ThermometerStream> sc_softmax(std::span<const ThermometerStream> x,
                                          const SoftmaxConfig& cfg) {
  cfg.validate();
  if (static_cast<std::int64_t>(x.size()) != cfg.m)
    throw std::invalid_argument("expected m input streams");
  for (const auto& s : x) {
    if (s.length() != cfg.b_x || s.alpha() != cfg.alpha_x)
      throw std::invalid_argument("input stream shape/scale does not match config");
  }
  const bool adaptive = cfg.alpha_mode == AlphaMode::kAdaptive;
  if (!adaptive) {
    DatapathPlan plan = plan_softmax(cfg);
    if (!plan.realizable) throw UnrealizableError(plan.reason);
  }

  std::vector<ThermometerStream> y;
  Rational y_alpha = cfg.alpha_y;
  if (cfg.first_iteration_special_case) {
    // y0 = 1/m folded into the scale of an all-ones stream: exact and free.
    const Rational alpha0 = Rational(2) / (Rational(cfg.m) * Rational(cfg.b_y));
    y.assign(static_cast<std::size_t>(cfg.m),
             ThermometerStream(cfg.b_y, cfg.b_y, alpha0));
  } else {
    const ThermometerStream y0 =
        encode_exact(Rational(1, cfg.m), cfg.b_y, cfg.alpha_y);
    y.assign(static_cast<std::size_t>(cfg.m), y0);
  }

  for (std::int64_t j = 0; j < cfg.k; ++j) {
    const bool special = cfg.first_iteration_special_case && j == 0;
    Rational used = y_alpha;
    IterationResult r =
        run_iteration(cfg, x, y, special, y_alpha, adaptive, &used);
    y = std::move(r.y);
    if (adaptive) y_alpha = used;
  }
  return y;
}

}  // namespace scforge
