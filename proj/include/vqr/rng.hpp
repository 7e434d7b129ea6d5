#pragma once

#include <cstdint>
#include <random>

namespace vqr {

// Seeded random source used everywhere randomness is needed (parameter
// initialization, SPSA perturbations, shuffles, shot sampling).  All draws go
// through the raw mt19937_64 stream, whose output is pinned by the standard,
// so results are reproducible across platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n) by rejection; avoids modulo bias.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  // +1 or -1 with equal probability.
  double rademacher() { return (engine_() & 1ull) ? 1.0 : -1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vqr
