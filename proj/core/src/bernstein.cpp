#include "scforge/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scforge/rng.hpp"

namespace scforge {

namespace {

/// Bernstein basis values B_i(u), i = 0..degree.
std::vector<double> basis(int degree, double u) {
  std::vector<double> b(static_cast<std::size_t>(degree) + 1);
  // Iterative binomial expansion keeps this stable for the small degrees used.
  b[0] = 1.0;
  for (int i = 1; i <= degree; ++i) {
    b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i - 1)] *
                                     static_cast<double>(degree - i + 1) /
                                     static_cast<double>(i);
  }
  for (int i = 0; i <= degree; ++i) {
    b[static_cast<std::size_t>(i)] *=
        std::pow(u, i) * std::pow(1.0 - u, degree - i);
  }
  return b;
}

/// Gaussian elimination with partial pivoting; the systems here are tiny and
/// the Bernstein normal equations are well conditioned at low degree.
std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    if (std::fabs(a[col][col]) < 1e-14)
      throw std::runtime_error("singular normal equations in polynomial fit");
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t r = n; r-- > 0;) {
    double acc = b[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  return x;
}

double de_casteljau(const std::vector<double>& coeff, double u) {
  std::vector<double> work = coeff;
  for (std::size_t level = work.size(); level-- > 1;) {
    for (std::size_t i = 0; i < level; ++i)
      work[i] = (1.0 - u) * work[i] + u * work[i + 1];
  }
  return work[0];
}

constexpr std::uint64_t kInputStreamTag = 0x1000;
constexpr std::uint64_t kCoeffStreamTag = 0x2000;

}  // namespace

BernsteinConfig fit_bernstein(const std::function<double(double)>& f, int degree,
                              double lo, double hi, std::int64_t bsl) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (!(hi > lo)) throw std::invalid_argument("empty fit interval");
  if (bsl < 1) throw std::invalid_argument("bitstream length must be >= 1");

  const int terms = degree + 1;
  const int grid = 1025;
  std::vector<std::vector<double>> ata(
      static_cast<std::size_t>(terms), std::vector<double>(static_cast<std::size_t>(terms), 0.0));
  std::vector<double> atb(static_cast<std::size_t>(terms), 0.0);
  for (int g = 0; g < grid; ++g) {
    const double u = static_cast<double>(g) / (grid - 1);
    const double x = lo + u * (hi - lo);
    const std::vector<double> b = basis(degree, u);
    const double y = f(x);
    for (int i = 0; i < terms; ++i) {
      atb[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)] * y;
      for (int j = 0; j < terms; ++j)
        ata[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  std::vector<double> raw = solve(std::move(ata), std::move(atb));

  // Affine map of the coefficient range into [0, 1]; the inverse is stored so
  // analytic and stochastic evaluations return values in the original range.
  BernsteinConfig cfg;
  cfg.degree = degree;
  cfg.bsl = bsl;
  cfg.lo = lo;
  cfg.hi = hi;
  const auto [mn, mx] = std::minmax_element(raw.begin(), raw.end());
  if (*mx - *mn < 1e-12) {
    // Constant fit: center it at 0.5 with a unit-wide map.
    cfg.range_lo = *mn - 0.5;
    cfg.range_hi = *mn + 0.5;
  } else {
    cfg.range_lo = *mn;
    cfg.range_hi = *mx;
  }
  cfg.coefficients.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    cfg.coefficients[i] = (raw[i] - cfg.range_lo) / (cfg.range_hi - cfg.range_lo);
  return cfg;
}

double bernstein_analytic(const BernsteinConfig& cfg, double x) {
  const double u = std::clamp((x - cfg.lo) / (cfg.hi - cfg.lo), 0.0, 1.0);
  const double v = de_casteljau(cfg.coefficients, u);
  return cfg.range_lo + v * (cfg.range_hi - cfg.range_lo);
}

double simulate_bernstein_sc(const BernsteinConfig& cfg, double x,
                             std::uint64_t seed) {
  const double p = std::clamp((x - cfg.lo) / (cfg.hi - cfg.lo), 0.0, 1.0);
  std::int64_t ones = 0;
  for (std::int64_t t = 0; t < cfg.bsl; ++t) {
    int count = 0;
    for (int j = 0; j < cfg.degree; ++j) {
      const std::uint64_t u = mix64(seed, kInputStreamTag + static_cast<std::uint64_t>(j),
                                    static_cast<std::uint64_t>(t));
      if (u64_to_unit_double(u) < p) ++count;
    }
    const std::uint64_t u = mix64(seed, kCoeffStreamTag + static_cast<std::uint64_t>(count),
                                  static_cast<std::uint64_t>(t));
    if (u64_to_unit_double(u) < cfg.coefficients[static_cast<std::size_t>(count)])
      ++ones;
  }
  const double freq = static_cast<double>(ones) / static_cast<double>(cfg.bsl);
  return cfg.range_lo + freq * (cfg.range_hi - cfg.range_lo);
}

}  // namespace scforge
