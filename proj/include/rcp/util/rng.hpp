#pragma once

#include <cstdint>

namespace rcp {

// Deterministic cross-platform RNG: splitmix64 seed expansion feeding
// xoshiro256**. Standard-library distributions are not portable across
// implementations, so bounded draws use rejection-free multiply-shift.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next();

  // Uniform in [0, n); n must be positive.
  uint64_t below(uint64_t n);

  // Uniform double in [0, 1).
  double unit();

 private:
  uint64_t s_[4];
};

uint64_t splitmix64(uint64_t& state);

// Stable 64-bit mix for deriving stream seeds from (seed, tag) pairs.
uint64_t mix_seed(uint64_t seed, uint64_t tag);

}  // namespace rcp
