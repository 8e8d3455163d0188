#pragma once

#include <cstdint>

namespace tel {

// Counter-based generator: splitmix64 finalizer applied to (key, counter).
// Every random draw in the project flows from one 64-bit seed through
// instances of this struct; there is no global RNG state.
struct CounterRng {
  uint64_t key = 0;
  uint64_t counter = 0;

  explicit CounterRng(uint64_t seed, uint64_t stream = 0)
      : key(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  uint64_t next_u64() {
    uint64_t z = key + 0x9E3779B97F4A7C15ULL * ++counter;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // uniform integer in [lo, hi]
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace tel
