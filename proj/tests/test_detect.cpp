#include <doctest.h>

#include <map>

#include "census/count.hpp"
#include "census/detect.hpp"

using namespace census;

namespace {

const Catalog& cat() { return Catalog::instance(); }

// Adjacency-table construction for the item-targeted D-free tests.
Tournament from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = 1;
  return Tournament::from_orientation(n, [&](int i, int j) {
    REQUIRE(adj[i][j] + adj[j][i] == 1);
    return adj[i][j] == 1;
  });
}

void check_is_d_witness(const Tournament& g, const DFreeResult& res) {
  REQUIRE(std::holds_alternative<Witness>(res));
  const auto& w = std::get<Witness>(res);
  CHECK(cat().classify(g.induced(w.vertices)) == Pattern::D);
}

}  // namespace

TEST_CASE("detect_T4: constant-time fact and small cases") {
  for (int seed = 0; seed < 10; ++seed) {
    auto g = Tournament::random(8 + seed * 5, 810 + seed);
    auto w = detect_T4(g);
    REQUIRE(w.has_value());
    CHECK(is_transitive(g.induced(w->vertices)));
  }
  CHECK_FALSE(detect_T4(Tournament::rotational(3)).has_value());
  CHECK_FALSE(detect_T4(cat().representative(Pattern::X4)).has_value());
  CHECK(detect_T4(Tournament::transitive(5)).has_value());
  // 4 <= n < 8 with a T4 present
  CHECK(detect_T4(cat().representative(Pattern::T4)).has_value());
}

TEST_CASE("detect_X4: component shapes") {
  CHECK_FALSE(detect_X4(Tournament::transitive(20)).has_value());

  auto w = detect_X4(Tournament::rotational(5));
  REQUIRE(w.has_value());
  CHECK(cat().classify(Tournament::rotational(5).induced(w->vertices)) == Pattern::X4);

  // Components all singletons or triangles: no X4.
  // 0 -> C3{1,2,3} -> 4
  auto g = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                          {1, 2}, {2, 3}, {3, 1},
                          {1, 4}, {2, 4}, {3, 4}});
  CHECK(scc(g).components.size() == 3);
  CHECK_FALSE(detect_X4(g).has_value());
}

TEST_CASE("detect_X4: both extension branches produce four-cycles") {
  // Mixed-vertex branch: R5's big component.
  auto w1 = detect_X4(Tournament::rotational(7));
  REQUIRE(w1.has_value());

  // Dominator/dominated branch: triangle {0,1,2}, vertex 3 dominated by
  // it, vertex 4 dominating it, and 3 -> 4 closing the strong component.
  auto g = from_edges(5, {{0, 1}, {1, 2}, {2, 0},
                          {0, 3}, {1, 3}, {2, 3},
                          {4, 0}, {4, 1}, {4, 2},
                          {3, 4}});
  CHECK(scc(g).components.size() == 1);
  auto w2 = detect_X4(g);
  REQUIRE(w2.has_value());
  CHECK(cat().classify(g.induced(w2->vertices)) == Pattern::X4);
  // returned vertices are the cycle in order
  const auto& c = w2->vertices;
  REQUIRE(c.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(g.edge(c[i], c[(i + 1) % 4]));
}

TEST_CASE("check_D_free: certificates") {
  auto res = check_D_free(Tournament::transitive(10));
  REQUIRE(std::holds_alternative<DFreeCertificate>(res));
  CHECK_FALSE(std::get<DFreeCertificate>(res).triangle.has_value());

  // The carousel on 7 vertices is D-free but far from transitive.
  auto carousel = Tournament::rotational(7);
  auto res2 = check_D_free(carousel);
  REQUIRE(std::holds_alternative<DFreeCertificate>(res2));
  CHECK(std::get<DFreeCertificate>(res2).triangle.has_value());
  CHECK(oracle_count(carousel, 4)[Pattern::D] == 0);

  auto d = cat().representative(Pattern::D);
  check_is_d_witness(d, check_D_free(d));
}

TEST_CASE("check_D_free: certificate implies transitive out-neighborhoods") {
  for (int seed = 0; seed < 200; ++seed) {
    auto g = Tournament::random(4 + seed % 10, 7000 + seed);
    auto res = check_D_free(g);
    bool free = std::holds_alternative<DFreeCertificate>(res);
    bool all_transitive = true;
    for (int v = 0; v < g.size(); ++v) {
      std::vector<int> outs;
      for (int u = 0; u < g.size(); ++u)
        if (u != v && g.edge(v, u)) outs.push_back(u);
      if (outs.size() >= 3 && !is_transitive(g.induced(outs))) all_transitive = false;
    }
    CHECK(free == all_transitive);
  }
}

// Each item of the D-free characterization, violated in isolation against
// an explicitly supplied triangle (a,b,c) = (0,1,2) with 0->1->2->0.
TEST_CASE("check_D_free: item 1 witness") {
  // x = 3 dominates the whole triangle.
  auto g = from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
  check_is_d_witness(g, check_D_free(g, {0, 1, 2}));
}

TEST_CASE("check_D_free: item 2 witness") {
  // x = 3 in N_{a}, y = 4 in N_empty, y -> x.
  auto g = from_edges(5, {{0, 1}, {1, 2}, {2, 0},
                          {3, 0}, {1, 3}, {2, 3},
                          {0, 4}, {1, 4}, {2, 4},
                          {4, 3}});
  check_is_d_witness(g, check_D_free(g, {0, 1, 2}));
}

TEST_CASE("check_D_free: item 3 witness") {
  // N_empty = {3,4,5} induces a directed triangle.
  std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 0}};
  for (int x = 3; x <= 5; ++x)
    for (int t = 0; t <= 2; ++t) e.push_back({t, x});
  e.push_back({3, 4});
  e.push_back({4, 5});
  e.push_back({5, 3});
  auto g = from_edges(6, e);
  check_is_d_witness(g, check_D_free(g, {0, 1, 2}));
}

TEST_CASE("check_D_free: item 4 witness") {
  // x = 3 in N_{a}, y = 4 in N_{b}, y -> x.
  auto g = from_edges(5, {{0, 1}, {1, 2}, {2, 0},
                          {3, 0}, {1, 3}, {2, 3},
                          {4, 1}, {0, 4}, {2, 4},
                          {4, 3}});
  check_is_d_witness(g, check_D_free(g, {0, 1, 2}));
}

TEST_CASE("check_D_free: item 5 witness") {
  // x = 3 in N_{ab}, y = 4 in N_{bc}, y -> x.
  auto g = from_edges(5, {{0, 1}, {1, 2}, {2, 0},
                          {3, 0}, {3, 1}, {2, 3},
                          {4, 1}, {4, 2}, {0, 4},
                          {4, 3}});
  check_is_d_witness(g, check_D_free(g, {0, 1, 2}));
}

TEST_CASE("check_D_free: item 6 witnesses, both directions") {
  // First: x = 3 in N_{a}, y = 4 in N_{ab}, y -> x.
  auto g1 = from_edges(5, {{0, 1}, {1, 2}, {2, 0},
                           {3, 0}, {1, 3}, {2, 3},
                           {4, 0}, {4, 1}, {2, 4},
                           {4, 3}});
  check_is_d_witness(g1, check_D_free(g1, {0, 1, 2}));
  // Second: x = 3 in N_{ab}, y = 4 in N_{b}, y -> x.
  auto g2 = from_edges(5, {{0, 1}, {1, 2}, {2, 0},
                           {3, 0}, {3, 1}, {2, 3},
                           {4, 1}, {0, 4}, {2, 4},
                           {4, 3}});
  check_is_d_witness(g2, check_D_free(g2, {0, 1, 2}));
}

TEST_CASE("check_D_free: item 7 witnesses, both directions") {
  // Bad triple with source and sink in N_{a} = {3,4}, middle 5 in N_{bc}.
  auto g1 = from_edges(6, {{0, 1}, {1, 2}, {2, 0},
                           {3, 0}, {1, 3}, {2, 3},
                           {4, 0}, {1, 4}, {2, 4},
                           {5, 1}, {5, 2}, {0, 5},
                           {3, 4}, {3, 5}, {5, 4}});
  check_is_d_witness(g1, check_D_free(g1, {0, 1, 2}));
  // Bad triple with source and sink in N_{bc} = {3,4}, middle 5 in N_{a}.
  auto g2 = from_edges(6, {{0, 1}, {1, 2}, {2, 0},
                           {3, 1}, {3, 2}, {0, 3},
                           {4, 1}, {4, 2}, {0, 4},
                           {5, 0}, {1, 5}, {2, 5},
                           {3, 4}, {3, 5}, {5, 4}});
  check_is_d_witness(g2, check_D_free(g2, {0, 1, 2}));
}

TEST_CASE("detect_D / detect_DT: transpose pairing") {
  auto d = cat().representative(Pattern::D);
  CHECK(detect_D(d).has_value());
  CHECK_FALSE(detect_DT(d).has_value());
  auto dt = d.transposed();
  CHECK_FALSE(detect_D(dt).has_value());
  auto w = detect_DT(dt);
  REQUIRE(w.has_value());
  CHECK(cat().classify(dt.induced(w->vertices)) == Pattern::DT);
}

TEST_CASE("detection agrees with the oracle over a seeded corpus") {
  for (int seed = 0; seed < 120; ++seed) {
    int n = 4 + seed % 29;
    auto g = Tournament::random(n, 8800 + seed);
    auto oc = oracle_count(g, 4);
    for (Pattern p : patterns_for(4)) {
      auto w = detect_pattern(g, p);
      CHECK(w.has_value() == (oc[p] > 0));
      if (w) CHECK(cat().classify(g.induced(w->vertices)) == p);
    }
  }
  // larger spot checks
  auto g64 = Tournament::random(64, 5);
  CHECK(detect_D(g64).has_value() == (oracle_count(g64, 4)[Pattern::D] > 0));
}
