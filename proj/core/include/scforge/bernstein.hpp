#pragma once

// Bernstein-polynomial stochastic baseline. A scalar function is least-squares
// fitted in the Bernstein basis over a mapped [0,1] domain; the stochastic
// circuit draws `degree` independent unipolar input streams plus one stream
// per coefficient and, each clock, the count of input ones selects which
// coefficient stream drives the output bit. The output ones frequency is an
// unbiased estimate of the polynomial value, with the 1/sqrt(bsl) fluctuation
// characteristic of stochastic encodings.

#include <cstdint>
#include <functional>
#include <vector>

namespace scforge {

struct BernsteinConfig {
  int degree = 3;                    // terms = degree + 1
  std::vector<double> coefficients;  // in [0, 1] after range mapping
  std::int64_t bsl = 1024;           // clocks per evaluation
  double lo = -4.0, hi = 4.0;        // input interval
  double range_lo = 0.0, range_hi = 1.0;  // inverse of the coefficient map
};

/// Least-squares fit of f on a dense grid over [lo, hi] in the Bernstein
/// basis, with the coefficient range mapped affinely into [0, 1].
BernsteinConfig fit_bernstein(const std::function<double(double)>& f, int degree,
                              double lo, double hi, std::int64_t bsl);

/// Exact polynomial value (de Casteljau plus the inverse range map).
double bernstein_analytic(const BernsteinConfig& cfg, double x);

/// One stochastic evaluation over cfg.bsl clocks. Deterministic given
/// (cfg, x, seed); different seeds fluctuate around the analytic value.
double simulate_bernstein_sc(const BernsteinConfig& cfg, double x,
                             std::uint64_t seed);

}  // namespace scforge
