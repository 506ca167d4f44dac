#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "census/errors.hpp"
#include "census/int128.hpp"

namespace census {

// The 18 isomorphism classes of tournaments on 3, 4 and 5 vertices.
enum class Pattern : int {
  T3, C3,                                           // k = 3
  T4, X4, D, DT,                                    // k = 4
  T5, H1, H1T, H2, H2T, H3, H4, H5, H6, H7, H8, R5  // k = 5
};

inline constexpr int kNumPatterns = 18;

std::string_view pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(std::string_view s);

// Vertex count of the class (3, 4 or 5).
int pattern_order(Pattern p);

// Classes of order k, in fixed output/catalog order.
std::span<const Pattern> patterns_for(int k);

// Class of the transposed tournament: D<->DT, H1<->H1T, H2<->H2T, rest fixed.
Pattern transpose_pattern(Pattern p);

// Exact counts of all classes of one order, aligned with patterns_for(k).
struct CountVector {
  int k = 0;
  std::vector<int128> counts;

  CountVector() = default;
  explicit CountVector(int order)
      : k(order), counts(patterns_for(order).size(), 0) {}

  int128& operator[](Pattern p);
  int128 operator[](Pattern p) const;
  int128 total() const;

  bool operator==(const CountVector&) const = default;
};

}  // namespace census
