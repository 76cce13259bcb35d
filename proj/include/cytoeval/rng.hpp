#pragma once

#include <cstdint>
#include <vector>

namespace cytoeval {

/// Counter-based pseudo-random generator (SplitMix64 output function over a
/// seed + counter * golden-gamma stream). Streams are splittable: fork(label)
/// derives an independent stream from the same root seed, so scenes, images
/// and perturbation passes can each draw from their own sequence and results
/// replay bit-identically on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {}

  uint64_t next() {
    counter_ += 1;
    return mix(seed_ + counter_ * kGamma);
  }

  /// Independent stream derived from this generator's seed and a label.
  Rng fork(uint64_t label) const { return Rng(mix(seed_ ^ mix(label + kGamma))); }

  /// Uniform integer in [0, bound). bound must be > 0.
  uint64_t below(uint64_t bound) {
    // 128-bit multiply keeps the map unbiased enough for test-data purposes
    // while staying deterministic across platforms.
    return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * bound) >> 64);
  }

  /// Uniform integer in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Index drawn from a discrete distribution given by non-negative weights.
  size_t weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = uniform() * total;
    for (size_t i = 0; i < weights.size(); ++i) {
      x -= weights[i];
      if (x < 0.0) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

 private:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  uint64_t seed_ = 0;
  uint64_t counter_ = 0;
};

}  // namespace cytoeval
