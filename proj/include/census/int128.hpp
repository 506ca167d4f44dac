#pragma once

#include <cstdint>
#include <string>

namespace census {

// Census sums reach ~n^5 and the CLI accepts n up to 2^14, which
// overflows 64 bits (already near n ~ 6*10^3 for some Table sums),
// so every count and edge-sum is carried in 128 bits.
using int128 = __int128;

inline constexpr int kMaxCensusVertices = 1 << 14;

std::string to_string(int128 v);

// Exact binomial coefficient; result must fit in int128 (always true for
// n <= 2^14, k <= 5).
int128 binom(long long n, int k);

}  // namespace census
