#pragma once

#include <cstdint>
#include <random>

namespace sqboost {

/// Seeded uniform sampler with a fixed bits-to-double mapping, so sequences are
/// reproducible across platforms and standard-library versions (the standard
/// distributions are not pinned down that far).
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sqboost
