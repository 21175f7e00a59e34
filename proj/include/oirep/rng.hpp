#pragma once

#include <cstdint>

namespace oirep {

// All randomness in the library flows from one seed through this generator
// (splitmix64). It is fixed here rather than taken from <random> so that
// seeded reports are byte-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, bound); bound must be positive and small.
  int below(int bound) { return int(next() % std::uint64_t(bound)); }

  // Small signed integer in [-span, span].
  int small_int(int span) { return below(2 * span + 1) - span; }

  Rng fork() { return Rng(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace oirep
