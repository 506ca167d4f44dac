#include <doctest.h>

#include "census/count.hpp"
#include "census/pairstats.hpp"
#include "census/rng.hpp"

using namespace census;

namespace {

struct DefStats {
  int dp, dm, pf, pb;
};

// Definitional O(n) scan per pair; the oracle for the matrix products.
DefStats def_stats(const Tournament& g, int u, int v) {
  DefStats s{0, 0, 0, 0};
  for (int w = 0; w < g.size(); ++w) {
    if (w == u || w == v) continue;
    s.dp += g.edge(u, w) && g.edge(v, w);
    s.dm += g.edge(w, u) && g.edge(w, v);
    s.pf += g.edge(u, w) && g.edge(w, v);
    s.pb += g.edge(v, w) && g.edge(w, u);
  }
  return s;
}

}  // namespace

TEST_CASE("pair stats on C3") {
  auto c3 = Tournament::rotational(3);
  auto ps = compute_pair_stats(c3);
  // On the edge 0->1 the third vertex closes the cycle: p(1,0) = 1.
  CHECK(ps.d_plus(0, 1) == 0);
  CHECK(ps.d_minus(0, 1) == 0);
  CHECK(ps.p(0, 1) == 0);
  CHECK(ps.p(1, 0) == 1);
}

TEST_CASE("pair stats equal the definitional scan") {
  for (int seed = 0; seed < 12; ++seed) {
    int n = 3 + (seed * 37) % 38;  // up to n = 40
    auto g = Tournament::random(n, 600 + seed);
    auto ps = compute_pair_stats(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        auto d = def_stats(g, u, v);
        CHECK(ps.d_plus(u, v) == d.dp);
        CHECK(ps.d_minus(u, v) == d.dm);
        CHECK(ps.p(u, v) == d.pf);
        CHECK(ps.p(v, u) == d.pb);
      }
  }
}

TEST_CASE("pair partition identity and symmetries") {
  auto g = Tournament::random(100, 2);
  auto ps = compute_pair_stats(g);
  for (int u = 0; u < 100; ++u)
    for (int v = u + 1; v < 100; ++v) {
      CHECK(ps.d_plus(u, v) + ps.d_minus(u, v) + ps.p(u, v) + ps.p(v, u) == 98);
      CHECK(ps.d_plus(u, v) == ps.d_plus(v, u));
      CHECK(ps.d_minus(u, v) == ps.d_minus(v, u));
    }
}

TEST_CASE("edge sums tie to the 3-vertex census") {
  for (int seed = 0; seed < 8; ++seed) {
    int n = 5 + seed * 6;
    auto g = Tournament::random(n, 700 + seed);
    auto ps = compute_pair_stats(g);
    int128 sdp = 0, sdm = 0, spf = 0, spb = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && g.edge(u, v)) {
          sdp += ps.d_plus(u, v);
          sdm += ps.d_minus(u, v);
          spf += ps.p(u, v);
          spb += ps.p(v, u);
        }
    auto c3 = count_3(g);
    CHECK(spf == c3[Pattern::T3]);  // each T3 once via its source->sink edge
    CHECK(spb == 3 * c3[Pattern::C3]);
    CHECK(sdp == c3[Pattern::T3]);
    CHECK(sdm == c3[Pattern::T3]);
  }
}

TEST_CASE("bipartite four-cycles: closed cases") {
  BipartiteGraph k22(2, 2);
  for (int u = 0; u < 2; ++u)
    for (int w = 0; w < 2; ++w) k22.add_edge(u, w);
  CHECK(bipartite_c4_count(k22) == 1);

  BipartiteGraph star(1, 5);
  for (int w = 0; w < 5; ++w) star.add_edge(0, w);
  CHECK(bipartite_c4_count(star) == 0);

  BipartiteGraph path(3, 2);  // a tree: u0-w0, u1-w0, u1-w1, u2-w1
  path.add_edge(0, 0);
  path.add_edge(1, 0);
  path.add_edge(1, 1);
  path.add_edge(2, 1);
  CHECK(bipartite_c4_count(path) == 0);

  BipartiteGraph k33(3, 3);
  for (int u = 0; u < 3; ++u)
    for (int w = 0; w < 3; ++w) k33.add_edge(u, w);
  CHECK(bipartite_c4_count(k33) == 9);  // C(3,2) * C(3,2)
}

TEST_CASE("bipartite four-cycles: quadruple-loop oracle") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int a = 2 + (int)rng.below(6), b = 2 + (int)rng.below(6);
    BipartiteGraph bp(a, b);
    for (int u = 0; u < a; ++u)
      for (int w = 0; w < b; ++w)
        if (rng.coin()) bp.add_edge(u, w);
    int128 expect = 0;
    for (int u1 = 0; u1 < a; ++u1)
      for (int u2 = u1 + 1; u2 < a; ++u2)
        for (int w1 = 0; w1 < b; ++w1)
          for (int w2 = w1 + 1; w2 < b; ++w2)
            if (bp.has_edge(u1, w1) && bp.has_edge(u1, w2) && bp.has_edge(u2, w1) &&
                bp.has_edge(u2, w2))
              expect += 1;
    CHECK(bipartite_c4_count(bp) == expect);
  }
}

TEST_CASE("bipartite_between extracts the directed A->B edges") {
  auto g = Tournament::random(10, 42);
  std::vector<int> a = {0, 2, 4}, b = {1, 3, 5, 7};
  auto bp = bipartite_between(g, a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      CHECK(bp.has_edge((int)i, (int)j) == g.edge(a[i], b[j]));
  CHECK_THROWS_AS(bipartite_between(g, a, std::vector<int>{0}), BadSubset);
}
