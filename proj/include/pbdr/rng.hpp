#pragma once

#include <cstdint>

namespace pbdr {

//! Deterministic, platform-independent RNG (splitmix64). Standard-library
//! distributions are implementation-defined, so draws are mapped to doubles
//! with fixed bit arithmetic to keep trajectories byte-reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed + 0x9E3779B97F4A7C15ull) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  //! Uniform in [0, 1).
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  //! Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  uint64_t state_;
};

}  // namespace pbdr
