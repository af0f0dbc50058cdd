#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wgorder {

/// Seeded uniform source used everywhere in the library: std::mt19937_64
/// with 53-bit open-interval uniforms. Identical seeds give identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) { return lo + engine_() % (hi - lo + 1); }
  /// Raw 64-bit draw, e.g. to seed a derived generator.
  std::uint64_t bits() { return engine_(); }
  bool bernoulli(double p) { return uniform() < p; }
  /// Unit-mean exponential by inversion.
  double exponential() { return -std::log(uniform()); }
  double gamma(double shape, double scale) {
    std::gamma_distribution<double> dist(shape, scale);
    return dist(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent per-trial seed derived from (seed, index) with a SplitMix64 finalizer.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace wgorder
