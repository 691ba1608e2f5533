#pragma once

#include <cstdint>
#include <random>

#include "hyper/geometry.hpp"

namespace hyper {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for one independent stream, derived from a root seed and a path of
/// indices such as (suite, case). Order-independent by construction.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(mix64(seed) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

// Uniform draws built directly on engine output; the standard distributions
// are implementation-defined, which would make reports differ across standard
// libraries. Streams are created per sampled set, so the engine must be cheap
// to seed: a 64-bit LCG (Knuth's MMIX constants) whose output goes through the
// splitmix64 finalizer to hide the weak low bits.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return mix64(engine_()); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Point point_in_box(double half_width) {
    const double x = uniform(-half_width, half_width);
    return {x, uniform(-half_width, half_width)};
  }

 private:
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0>
      engine_;
};

}  // namespace hyper
