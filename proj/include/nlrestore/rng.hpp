#pragma once

#include <cstdint>

namespace nlrestore {

// SplitMix64. The exact recurrence is part of the artifact contract: every
// seeded degradation must reproduce bit-identically on any platform.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double nextUnit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t nextBelow(std::uint64_t bound) { return next() % bound; }

  // 0 or 255 with equal probability.
  std::uint8_t nextExtreme() { return (next() & 1) ? 255 : 0; }
};

}  // namespace nlrestore
