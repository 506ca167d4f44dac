#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "census/bits.hpp"
#include "census/int128.hpp"
#include "census/tournament.hpp"

namespace census {

// All pairwise statistics of a tournament:
//   d_plus(u,v)  = |N+(u) & N+(v)|      (entry of A+ A+^T)
//   d_minus(u,v) = |N-(u) & N-(v)|      (entry of A- A-^T)
//   p(u,v)       = #{w : u->w->v}       (entry of (A+)^2)
// p(v,u) is the transposed entry of the same product, so three dense
// matrices carry all four stats. For every pair,
// d_plus + d_minus + p(u,v) + p(v,u) = n-2.
struct PairStats {
  int n = 0;
  std::vector<std::uint32_t> dplus;   // n*n row-major, diagonal unused
  std::vector<std::uint32_t> dminus;
  std::vector<std::uint32_t> puv;     // puv[u*n+v] = p(u,v)

  std::uint32_t d_plus(int u, int v) const { return dplus[std::size_t(u) * n + v]; }
  std::uint32_t d_minus(int u, int v) const { return dminus[std::size_t(u) * n + v]; }
  std::uint32_t p(int u, int v) const { return puv[std::size_t(u) * n + v]; }
};

// Boolean matrix products realized as bit-row intersections + popcounts.
PairStats compute_pair_stats(const Tournament& g);

// Bipartite graph with `left` row vertices and `right` column vertices.
struct BipartiteGraph {
  int left = 0, right = 0;
  BitMatrix adj;  // row u: neighbors of left-vertex u among right vertices

  BipartiteGraph() = default;
  BipartiteGraph(int l, int r) : left(l), right(r), adj(l, r) {}
  void add_edge(int u, int w) { adj.set(u, w); }
  bool has_edge(int u, int w) const { return adj.test(u, w); }
};

// Number of four-cycles u1 w1 u2 w2 (u's left, w's right):
// sum over unordered left pairs of C(codegree, 2).
int128 bipartite_c4_count(const BipartiteGraph& b);

// The bipartite graph on (A, B) keeping exactly g's edges directed A -> B.
// A and B must be disjoint.
BipartiteGraph bipartite_between(const Tournament& g, std::span<const int> a,
                                 std::span<const int> b);

}  // namespace census
