#pragma once

// MAE measurement harness. Test vectors come from seeded synthetic
// distributions or CSV fixtures; reports are reproducible bit-for-bit from
// (config, seed) because sampling and reduction order are fixed.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scforge/softmax.hpp"

namespace scforge {

struct Distribution {
  enum class Kind { kUniform, kGaussian, kFile };
  Kind kind = Kind::kUniform;
  double lo = -4.0, hi = 4.0;          // uniform
  double mu = 0.0, sigma = 1.0, clip = 4.0;  // gaussian, clamped to [-clip, clip]
  std::string path;                    // file

  /// "uniform:LO:HI", "gaussian:MU:SIGMA:CLIP" or "file:PATH".
  static Distribution parse(const std::string& text);
  std::string to_string() const;
};

/// `count` vectors of length m, deterministic in seed. File mode returns the
/// fixture rows verbatim (each must have length m) and ignores count/seed.
std::vector<std::vector<double>> gen_vectors(const Distribution& dist,
                                             std::int64_t m, std::int64_t count,
                                             std::uint64_t seed);

struct EvalReport {
  std::string block_id;
  std::string config_digest;
  std::int64_t samples = 0;
  double mae = 0.0;
  double max_abs_error = 0.0;
  std::string distribution;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

/// Mean |block(x) - gelu(x)| over scalar samples. The block receives the
/// sample index so stochastic evaluators can derive per-sample seeds.
EvalReport mae_gelu(const std::function<double(double, std::int64_t)>& block,
                    const std::string& block_id, const std::string& config_digest,
                    std::span<const double> samples, const Distribution& dist,
                    std::uint64_t seed);

/// Per-element mean |decode(sc_softmax(x)) - exact_softmax(x)| over vectors.
EvalReport mae_softmax(const SoftmaxConfig& cfg,
                       std::span<const std::vector<double>> vectors,
                       const Distribution& dist, std::uint64_t seed);

}  // namespace scforge
