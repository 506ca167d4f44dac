#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "census/bits.hpp"
#include "census/errors.hpp"

namespace census {

// A tournament on n vertices: exactly one directed edge per vertex pair.
// Rows of the adjacency bit-matrix are out-neighborhoods; the transposed
// rows (in-neighborhoods) are kept alongside since every counting routine
// intersects both. Immutable after construction.
class Tournament {
 public:
  // Text input, auto-detecting the two formats:
  //   matrix:    line 1 = n, then n lines of n chars from {0,1}
  //   edge list: lines "u v" (u->v) covering every pair exactly once
  // Throws SyntaxError / NotATournament.
  static Tournament from_text(std::istream& in);
  static Tournament from_string(std::string_view text);

  // Each pair (i<j, row-major order) oriented by one splitmix64 output's
  // low bit: 1 means i->j. Identical (n, seed) gives identical results
  // on all platforms.
  static Tournament random(int n, std::uint64_t seed);

  // i -> j whenever i < j.
  static Tournament transitive(int n);

  // Rotational tournament on odd n: i -> i+1, ..., i+(n-1)/2 (mod n).
  // n=5 gives R5, n=7 the carousel tournament.
  static Tournament rotational(int n);

  // Builds from an orientation predicate consulted once per pair i<j;
  // pred(i,j) true means i->j. Valid by construction.
  template <typename Pred>
  static Tournament from_orientation(int n, Pred&& pred) {
    Tournament t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (pred(i, j))
          t.set_edge(i, j);
        else
          t.set_edge(j, i);
    t.finalize();
    return t;
  }

  int size() const { return n_; }
  bool edge(int u, int v) const { return out_.test(u, v); }
  std::span<const word> out_row(int v) const { return out_.row(v); }
  std::span<const word> in_row(int v) const { return in_.row(v); }
  int out_degree(int v) const { return out_deg_[v]; }
  int in_degree(int v) const { return n_ - 1 - out_deg_[v]; }
  std::span<const int> out_degrees() const { return out_deg_; }

  Tournament transposed() const;

  // Sub-tournament on the given vertices; duplicate or out-of-range
  // entries throw BadSubset. Vertex order of the result follows ascending
  // original labels regardless of the order given.
  Tournament induced(std::span<const int> vertices) const;

  std::string to_matrix_text() const;
  std::string to_edge_text() const;

  bool operator==(const Tournament&) const = default;

 private:
  explicit Tournament(int n);
  void set_edge(int u, int v) {
    out_.set(u, v);
    in_.set(v, u);
  }
  void finalize();

  int n_ = 0;
  BitMatrix out_;
  BitMatrix in_;
  std::vector<int> out_deg_;
};

// Strongly connected components in condensation order: every edge between
// distinct components leaves the earlier one. In a tournament this order
// is total.
struct SccDecomposition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
};

SccDecomposition scc(const Tournament& g);

// True iff the out-degree sequence is {0,...,n-1} and the descending-degree
// order is consistent with every edge.
bool is_transitive(const Tournament& g);

// Vertices sorted by descending out-degree (ties by label).
std::vector<int> by_out_degree_desc(const Tournament& g);

// k vertices inducing a transitive tournament, in dominance order, found by
// recursing into the larger of a pivot's out-/in-neighborhoods; O(kn).
// Requires n >= 2^(k-1), else throws TooFewVertices.
std::vector<int> find_transitive(const Tournament& g, int k);

// Some directed triangle a->b->c->a, or nullopt when transitive. O(n^2).
std::optional<std::array<int, 3>> find_triangle(const Tournament& g);

// Triangle search restricted to a vertex subset (labels of g).
std::optional<std::array<int, 3>> find_triangle_in(const Tournament& g,
                                                   std::span<const int> vertices);

}  // namespace census
