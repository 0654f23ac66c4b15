#include "doctest.h"

#include <cmath>

#include "scforge/bernstein.hpp"
#include "scforge/eval.hpp"
#include "scforge/math.hpp"
#include "scforge/rng.hpp"
#include "scforge/si.hpp"

using namespace scforge;

TEST_CASE("distribution spec parsing round-trips") {
  const auto u = Distribution::parse("uniform:-4:4");
  CHECK(u.kind == Distribution::Kind::kUniform);
  CHECK(u.lo == -4.0);
  CHECK(u.hi == 4.0);
  const auto g = Distribution::parse("gaussian:0:1:4");
  CHECK(g.kind == Distribution::Kind::kGaussian);
  CHECK(g.clip == 4.0);
  const auto f = Distribution::parse("file:/tmp/x.csv");
  CHECK(f.path == "/tmp/x.csv");
  CHECK_THROWS_AS(Distribution::parse("poisson:3"), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::parse("uniform:4:-4"), std::invalid_argument);
}

TEST_CASE("gen_vectors is deterministic in the seed") {
  const auto dist = Distribution::parse("gaussian:0:1:4");
  const auto a = gen_vectors(dist, 16, 32, 9);
  const auto b = gen_vectors(dist, 16, 32, 9);
  CHECK(a == b);
  const auto c = gen_vectors(dist, 16, 32, 10);
  CHECK(a != c);
}

TEST_CASE("uniform sample moments match the interval") {
  const auto dist = Distribution::parse("uniform:-4:4");
  const auto vs = gen_vectors(dist, 10, 10000, 4);
  double mean = 0.0;
  std::int64_t count = 0;
  for (const auto& row : vs)
    for (double v : row) {
      CHECK(v >= -4.0);
      CHECK(v < 4.0);
      mean += v;
      ++count;
    }
  mean /= static_cast<double>(count);
  // 3 sigma of the sample mean: 3 * (8/sqrt(12)) / sqrt(n).
  CHECK(std::fabs(mean) <= 3.0 * 8.0 / std::sqrt(12.0) / std::sqrt(1e5));
}

TEST_CASE("file fixture returns exactly its rows") {
  const auto dist =
      Distribution::parse(std::string("file:") + SCFORGE_TEST_DATA_DIR + "/vectors_3rows.csv");
  const auto vs = gen_vectors(dist, 4, 999, 5);
  REQUIRE(vs.size() == 3);
  CHECK(vs[0] == std::vector<double>{0.5, -1.0, 2.0, 0.0});
  CHECK(vs[2] == std::vector<double>{-4.0, 4.0, 0.25, -0.25});
  CHECK_THROWS(gen_vectors(dist, 5, 1, 5));  // wrong row length
  const auto missing = Distribution::parse("file:/nonexistent/file.csv");
  CHECK_THROWS(gen_vectors(missing, 4, 1, 5));
}

TEST_CASE("mae_gelu is zero for an exactly representable staircase") {
  // Identity scales and grid-point samples: the block reproduces its own grid.
  const auto cfg = synthesize([](double x) { return gelu(x); }, 64, 64,
                              Rational(1, 8), Rational(1, 8));
  std::vector<double> samples;
  for (std::int64_t n = 0; n <= 64; ++n) {
    const double x = to_double(Rational(1, 8)) * (static_cast<double>(n) - 32.0);
    const double g = gelu(x);
    const double quantized =
        decode(encode(g, 64, Rational(1, 8)));
    if (std::fabs(quantized - g) < 1e-12) samples.push_back(x);
  }
  REQUIRE(!samples.empty());
  const auto dist = Distribution::parse("uniform:-4:4");
  const auto report = mae_gelu(
      [&](double x, std::int64_t) { return decode(si_apply(cfg, encode(x, 64, Rational(1, 8)))); },
      "si-gelu", "test", samples, dist, 0);
  CHECK(report.mae == 0.0);
  CHECK(report.max_abs_error == 0.0);
}

TEST_CASE("SI MAE equals the quadrature of the quantization error") {
  const std::int64_t b = 8;
  const Rational alpha(1);
  const auto cfg = synthesize([](double x) { return gelu(x); }, b, b, alpha, alpha);

  // Independent quadrature: per encode cell, integrate |staircase - gelu|.
  double integral = 0.0;
  const int steps_per_cell = 4000;
  for (std::int64_t n = 0; n <= b; ++n) {
    const double level = static_cast<double>(n) - 4.0;
    const double out = decode(si_apply(cfg, ThermometerStream(b, n, alpha)));
    const double cell_lo = std::max(-4.0, level - 0.5);
    const double cell_hi = std::min(4.0, level + 0.5);
    const double h = (cell_hi - cell_lo) / steps_per_cell;
    for (int i = 0; i < steps_per_cell; ++i) {
      const double x0 = cell_lo + h * i;
      const double x1 = x0 + h;
      integral += 0.5 * (std::fabs(out - gelu(x0)) + std::fabs(out - gelu(x1))) * h;
    }
  }
  const double analytic_mae = integral / 8.0;

  const auto dist = Distribution::parse("uniform:-4:4");
  const auto vs = gen_vectors(dist, 1, 200000, 21);
  std::vector<double> samples;
  samples.reserve(vs.size());
  for (const auto& row : vs) samples.push_back(row[0]);
  const auto report = mae_gelu(
      [&](double x, std::int64_t) { return decode(si_apply(cfg, encode(x, b, alpha))); },
      "si-gelu", "test", samples, dist, 21);
  CHECK(report.mae == doctest::Approx(analytic_mae).epsilon(0.02));
  CHECK(std::fabs(report.mae - analytic_mae) < 1e-3);
}

TEST_CASE("repeated SI evaluation is noise-free, Bernstein is not") {
  const auto si_cfg = synthesize([](double x) { return gelu(x); }, 8, 8,
                                 Rational(1), Rational(1));
  const auto dist = Distribution::parse("uniform:-4:4");
  const auto vs = gen_vectors(dist, 1, 500, 3);
  std::vector<double> samples;
  for (const auto& row : vs) samples.push_back(row[0]);

  auto si_block = [&](double x, std::int64_t) {
    return decode(si_apply(si_cfg, encode(x, 8, Rational(1))));
  };
  const auto r1 = mae_gelu(si_block, "si", "d", samples, dist, 3);
  const auto r2 = mae_gelu(si_block, "si", "d", samples, dist, 3);
  CHECK(r1.mae == r2.mae);

  const auto bp = fit_bernstein([](double x) { return gelu(x); }, 3, -4.0, 4.0, 256);
  auto bp_block = [&](double x, std::int64_t i) {
    return simulate_bernstein_sc(bp, x, mix64(3, 0xB, static_cast<std::uint64_t>(i)));
  };
  const auto b1 = mae_gelu(bp_block, "bernstein", "d", samples, dist, 3);
  const auto b2 = mae_gelu(bp_block, "bernstein", "d", samples, dist, 3);
  CHECK(b1.mae == b2.mae);  // same seeds: reproducible
  auto bp_block2 = [&](double x, std::int64_t i) {
    return simulate_bernstein_sc(bp, x, mix64(4, 0xB, static_cast<std::uint64_t>(i)));
  };
  const auto b3 = mae_gelu(bp_block2, "bernstein", "d", samples, dist, 4);
  CHECK(b1.mae != b3.mae);  // different seeds fluctuate
}

TEST_CASE("mae_softmax on constant vectors measures the 1/m grid distance") {
  SoftmaxConfig cfg;
  cfg.m = 4;
  cfg.k = 2;
  cfg.b_x = 8;
  cfg.b_y = 64;
  cfg.alpha_x = SoftmaxConfig::default_alpha_x(8);
  cfg.alpha_y = SoftmaxConfig::default_alpha_y(64);
  const std::vector<std::vector<double>> vectors{{1.0, 1.0, 1.0, 1.0}};
  const auto dist = Distribution::parse("uniform:-4:4");
  const auto report = mae_softmax(cfg, vectors, dist, 0);
  const double nearest = decode(encode_exact(Rational(1, 4), cfg.b_y, cfg.alpha_y));
  CHECK(report.mae == doctest::Approx(std::fabs(nearest - 0.25)).epsilon(1e-12));
}

TEST_CASE("eval report JSON carries the identification fields") {
  EvalReport r;
  r.block_id = "x";
  r.config_digest = "abc";
  r.samples = 3;
  r.mae = 0.5;
  r.max_abs_error = 1.0;
  r.distribution = "uniform:-4:4";
  r.seed = 7;
  const auto j = r.to_json();
  CHECK(j.at("block") == "x");
  CHECK(j.at("samples") == 3);
  CHECK(j.at("seed") == 7);
}
