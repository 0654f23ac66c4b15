#pragma once

// Counter-friendly deterministic RNG. SplitMix64 is used both as a sequential
// generator and as a keyed mixer for independent stochastic bit sources, so
// every experiment is reproducible from (seed, indices) alone, independent of
// platform or standard-library distribution internals.

#include <cmath>
#include <cstdint>

namespace scforge {

constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kSplitMixGamma;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Keyed stateless mix: one uniform 64-bit word per (key, a, b) triple.
inline std::uint64_t mix64(std::uint64_t key, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = splitmix64(key ^ (a * 0xD6E8FEB86659FD93ull));
  return splitmix64(h ^ (b * 0xA5CB3F1D3C1E9E4Dull));
}

inline double u64_to_unit_double(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kSplitMixGamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return u64_to_unit_double(next_u64()); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; pairs are cached.
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  /// Independent child generator; children with distinct tags never collide.
  Rng fork(std::uint64_t tag) const { return Rng(mix64(state_, tag, 0x5eedull)); }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace scforge
