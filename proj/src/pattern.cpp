#include "census/pattern.hpp"

#include <array>

namespace census {

namespace {

constexpr std::array<std::string_view, kNumPatterns> kNames = {
    "T3", "C3", "T4", "X4", "D",  "DT", "T5", "H1", "H1T",
    "H2", "H2T", "H3", "H4", "H5", "H6", "H7", "H8", "R5"};

constexpr std::array<Pattern, 2> kOrder3 = {Pattern::T3, Pattern::C3};
constexpr std::array<Pattern, 4> kOrder4 = {Pattern::T4, Pattern::X4,
                                            Pattern::D, Pattern::DT};
constexpr std::array<Pattern, 12> kOrder5 = {
    Pattern::T5, Pattern::H1, Pattern::H1T, Pattern::H2, Pattern::H2T,
    Pattern::H3, Pattern::H4, Pattern::H5,  Pattern::H6, Pattern::H7,
    Pattern::H8, Pattern::R5};

}  // namespace

std::string_view pattern_name(Pattern p) { return kNames[int(p)]; }

std::optional<Pattern> pattern_from_name(std::string_view s) {
  for (int i = 0; i < kNumPatterns; ++i)
    if (kNames[i] == s) return Pattern(i);
  return std::nullopt;
}

int pattern_order(Pattern p) {
  int i = int(p);
  if (i < 2) return 3;
  if (i < 6) return 4;
  return 5;
}

std::span<const Pattern> patterns_for(int k) {
  switch (k) {
    case 3:
      return kOrder3;
    case 4:
      return kOrder4;
    case 5:
      return kOrder5;
    default:
      throw Error("patterns_for: k must be 3, 4 or 5");
  }
}

Pattern transpose_pattern(Pattern p) {
  switch (p) {
    case Pattern::D:
      return Pattern::DT;
    case Pattern::DT:
      return Pattern::D;
    case Pattern::H1:
      return Pattern::H1T;
    case Pattern::H1T:
      return Pattern::H1;
    case Pattern::H2:
      return Pattern::H2T;
    case Pattern::H2T:
      return Pattern::H2;
    default:
      return p;
  }
}

int128& CountVector::operator[](Pattern p) {
  auto pats = patterns_for(k);
  for (std::size_t i = 0; i < pats.size(); ++i)
    if (pats[i] == p) return counts[i];
  throw Error("CountVector: pattern order mismatch");
}

int128 CountVector::operator[](Pattern p) const {
  auto pats = patterns_for(k);
  for (std::size_t i = 0; i < pats.size(); ++i)
    if (pats[i] == p) return counts[i];
  throw Error("CountVector: pattern order mismatch");
}

int128 CountVector::total() const {
  int128 s = 0;
  for (int128 c : counts) s += c;
  return s;
}

}  // namespace census
