#include <benchmark/benchmark.h>

#include <vector>

#include "scforge/arith.hpp"
#include "scforge/bernstein.hpp"
#include "scforge/eval.hpp"
#include "scforge/math.hpp"
#include "scforge/rng.hpp"
#include "scforge/si.hpp"
#include "scforge/softmax.hpp"

namespace bm = benchmark;
using namespace scforge;

static void BM_BsnAdd(bm::State& st) {
  const auto count = static_cast<std::size_t>(st.range(0));
  Rng rng(1);
  std::vector<ThermometerStream> inputs;
  for (std::size_t i = 0; i < count; ++i)
    inputs.emplace_back(64, static_cast<std::int64_t>(rng.next_u64() % 65),
                        Rational(1, 8));
  for (auto _ : st) {
    auto r = bsn_add(inputs);
    bm::DoNotOptimize(r.sum.ones());
  }
}
BENCHMARK(BM_BsnAdd)->Arg(8)->Arg(64);

static void BM_SiSynthesize(bm::State& st) {
  const std::int64_t b = st.range(0);
  for (auto _ : st) {
    auto cfg = synthesize([](double x) { return gelu(x); }, b, b, Rational(8, b),
                          Rational(8, b));
    bm::DoNotOptimize(cfg.gate_summary().total());
  }
}
BENCHMARK(BM_SiSynthesize)->Arg(8)->Arg(64)->Arg(256);

static void BM_ScSoftmax(bm::State& st) {
  SoftmaxConfig cfg;
  cfg.m = 8;
  cfg.k = st.range(0);
  cfg.b_x = 4;
  cfg.b_y = 16;
  cfg.alpha_x = SoftmaxConfig::default_alpha_x(4);
  cfg.alpha_y = SoftmaxConfig::default_alpha_y(16);
  Rng rng(2);
  std::vector<double> x(8);
  for (auto& v : x) v = rng.uniform(-4.0, 4.0);
  const auto streams = encode_softmax_input(x, cfg);
  for (auto _ : st) {
    auto y = sc_softmax(streams, cfg);
    bm::DoNotOptimize(y[0].ones());
  }
}
BENCHMARK(BM_ScSoftmax)->Arg(1)->Arg(4);

static void BM_BernsteinSim(bm::State& st) {
  const auto cfg =
      fit_bernstein([](double x) { return gelu(x); }, 3, -4.0, 4.0, st.range(0));
  std::uint64_t seed = 0;
  for (auto _ : st) {
    bm::DoNotOptimize(simulate_bernstein_sc(cfg, 1.0, seed++));
  }
}
BENCHMARK(BM_BernsteinSim)->Arg(1024)->Arg(4096);

BENCHMARK_MAIN();
