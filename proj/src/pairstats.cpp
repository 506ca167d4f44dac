#include "census/pairstats.hpp"

namespace census {

PairStats compute_pair_stats(const Tournament& g) {
  int n = g.size();
  PairStats s;
  s.n = n;
  s.dplus.assign(std::size_t(n) * n, 0);
  s.dminus.assign(std::size_t(n) * n, 0);
  s.puv.assign(std::size_t(n) * n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int u = 0; u < n; ++u) {
    auto out_u = g.out_row(u);
    auto in_u = g.in_row(u);
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      std::size_t idx = std::size_t(u) * n + v;
      s.dplus[idx] = bits::popcount_and(out_u, g.out_row(v));
      s.dminus[idx] = bits::popcount_and(in_u, g.in_row(v));
      s.puv[idx] = bits::popcount_and(out_u, g.in_row(v));
    }
  }
  return s;
}

int128 bipartite_c4_count(const BipartiteGraph& b) {
  int128 total = 0;
  for (int u1 = 0; u1 < b.left; ++u1)
    for (int u2 = u1 + 1; u2 < b.left; ++u2) {
      int codeg = bits::popcount_and(b.adj.row(u1), b.adj.row(u2));
      total += int128(codeg) * (codeg - 1) / 2;
    }
  return total;
}

BipartiteGraph bipartite_between(const Tournament& g, std::span<const int> a,
                                 std::span<const int> b) {
  BitVec in_a(g.size());
  for (int v : a) in_a.set(v);
  for (int v : b)
    if (in_a.test(v)) throw BadSubset("bipartite sides must be disjoint");
  BipartiteGraph bp((int)a.size(), (int)b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (g.edge(a[i], b[j])) bp.add_edge((int)i, (int)j);
  return bp;
}

}  // namespace census
