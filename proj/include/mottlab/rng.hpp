#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mottlab {

/// Deterministic RNG used across all Monte Carlo code. mt19937_64 output is
/// fixed by the standard, and the distributions below are implemented by
/// hand, so identical seeds give bit-identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Substream for worker `index`, decorrelated from the master seed.
  static Rng substream(std::uint64_t master, std::uint64_t index) {
    return Rng(splitmix64(master + 0x9e3779b97f4a7c15ULL * (index + 1)));
  }

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal (Box-Muller; second deviate cached).
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(t);
    has_cached_ = true;
    return r * std::cos(t);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  /// Poisson count by inversion; switches to a rounded normal for large mean.
  std::uint64_t poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 64.0) {
      const double limit = std::exp(-mean);
      std::uint64_t k = 0;
      double p = uniform();
      while (p > limit) {
        ++k;
        p *= uniform();
      }
      return k;
    }
    const double x = std::round(normal(mean, std::sqrt(mean)));
    return x > 0.0 ? static_cast<std::uint64_t>(x) : 0;
  }

  std::uint64_t next_u64() { return gen_(); }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace mottlab
