#pragma once

#include <cstdint>

namespace census {

// Deterministic 64-bit generator (splitmix64, Vigna / Steele et al.).
// All randomized fixtures in the library derive from this so that a given
// seed produces bit-identical streams on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  bool coin() { return next() & 1ULL; }

  // Uniform in [0, bound); bound <= a few thousand here, so the modulo
  // bias of ~bound/2^64 is immaterial.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace census
