#include <doctest.h>

#include <algorithm>
#include <set>

#include "census/catalog.hpp"
#include "census/tournament.hpp"

using namespace census;

namespace {

// Reachability closure by repeated relaxation; independent of scc().
std::vector<BitVec> reach_oracle(const Tournament& g) {
  int n = g.size();
  std::vector<BitVec> reach(n, BitVec(n));
  for (int v = 0; v < n; ++v) {
    reach[v].set(v);
    for (std::size_t w = 0; w < reach[v].words().size(); ++w)
      reach[v].words()[w] |= g.out_row(v)[w];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        if (reach[v].test(u))
          for (std::size_t w = 0; w < reach[v].words().size(); ++w) {
            word before = reach[v].words()[w];
            reach[v].words()[w] |= reach[u].words()[w];
            if (reach[v].words()[w] != before) changed = true;
          }
  }
  return reach;
}

bool has_three_cycle_scan(const Tournament& g) {
  int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (g.edge(a, b) && g.edge(b, c) && g.edge(c, a)) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("parse: matrix format") {
  auto c3 = Tournament::from_string("3\n010\n001\n100\n");
  CHECK(c3.size() == 3);
  CHECK(c3.edge(0, 1));
  CHECK(c3.edge(1, 2));
  CHECK(c3.edge(2, 0));

  auto t4 = Tournament::from_string("4\n0111\n0011\n0001\n0000\n");
  CHECK(is_transitive(t4));

  // trailing newline optional
  CHECK(Tournament::from_string("2\n01\n00").size() == 2);
}

TEST_CASE("parse: rejections") {
  CHECK_THROWS_AS(Tournament::from_string("2\n01\n10\n"), NotATournament);
  CHECK_THROWS_AS(Tournament::from_string("2\n11\n00\n"), NotATournament);  // diagonal
  CHECK_THROWS_AS(Tournament::from_string("2\n0a\n10\n"), SyntaxError);
  CHECK_THROWS_AS(Tournament::from_string("3\n01\n10\n"), SyntaxError);  // short row
  CHECK_THROWS_AS(Tournament::from_string("2\n01\n"), SyntaxError);     // missing row
  CHECK_THROWS_AS(Tournament::from_string(""), SyntaxError);
  CHECK_THROWS_AS(Tournament::from_string("x\n"), SyntaxError);
}

TEST_CASE("parse: edge list covers every pair exactly once") {
  auto c3 = Tournament::from_string("0 1\n1 2\n2 0\n");
  CHECK(c3.edge(2, 0));
  CHECK_THROWS_AS(Tournament::from_string("0 1\n1 0\n"), NotATournament);
  CHECK_THROWS_AS(Tournament::from_string("0 1\n2 0\n"), NotATournament);  // missing pairs
  CHECK_THROWS_AS(Tournament::from_string("0 0\n"), NotATournament);
  CHECK_THROWS_AS(Tournament::from_string("0 1 2\n"), SyntaxError);
}

TEST_CASE("parse/serialize round trip in both formats") {
  auto g = Tournament::random(9, 123);
  CHECK(Tournament::from_string(g.to_matrix_text()) == g);
  CHECK(Tournament::from_string(g.to_edge_text()) == g);
}

TEST_CASE("random: determinism and degree sum") {
  auto a = Tournament::random(5, 7), b = Tournament::random(5, 7);
  CHECK(a == b);
  CHECK(Tournament::random(5, 8) != a);
  CHECK(Tournament::random(1, 42).size() == 1);

  auto big = Tournament::random(200, 1);
  long long sum = 0;
  for (int v = 0; v < 200; ++v) sum += big.out_degree(v);
  CHECK(sum == 19900);
}

TEST_CASE("transpose: involution and degree reversal") {
  auto c3 = Tournament::rotational(3);
  CHECK(canonical_form(c3.transposed()) == canonical_form(c3));

  auto t5 = Tournament::transitive(5);
  CHECK(is_transitive(t5.transposed()));

  auto g = Tournament::random(17, 5);
  CHECK(g.transposed().transposed() == g);
  for (int v = 0; v < 17; ++v) CHECK(g.transposed().out_degree(v) == g.in_degree(v));
}

TEST_CASE("induced: identity, transitivity, errors") {
  auto g = Tournament::random(8, 2);
  std::vector<int> all = {0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(g.induced(all) == g);

  auto t5 = Tournament::transitive(5);
  CHECK(is_transitive(t5.induced(std::vector<int>{0, 2, 4})));

  // Every 4-subset of R5 contains a directed triangle.
  auto r5 = Tournament::rotational(5);
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<int> vs;
    for (int v = 0; v < 5; ++v)
      if (v != skip) vs.push_back(v);
    CHECK(find_triangle(r5.induced(vs)).has_value());
  }

  CHECK_THROWS_AS(g.induced(std::vector<int>{1, 1}), BadSubset);
  CHECK_THROWS_AS(g.induced(std::vector<int>{7, 8}), BadSubset);
  CHECK_THROWS_AS(g.induced(std::vector<int>{}), BadSubset);
}

TEST_CASE("scc: canonical shapes") {
  auto t6 = Tournament::transitive(6);
  auto d = scc(t6);
  REQUIRE(d.components.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(d.components[i] == std::vector<int>{i});

  CHECK(scc(Tournament::rotational(3)).components.size() == 1);

  // A source vertex over R5: components [{source}, V(R5)].
  auto g = Tournament::from_orientation(6, [](int i, int j) {
    if (i == 0) return true;
    int diff = (j - i) % 5;
    return diff == 1 || diff == 2;
  });
  auto dd = scc(g);
  REQUIRE(dd.components.size() == 2);
  CHECK(dd.components[0] == std::vector<int>{0});
  CHECK(dd.components[1] == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("scc: agrees with reachability oracle on random instances") {
  for (int seed = 0; seed < 30; ++seed) {
    int n = 2 + seed;
    auto g = Tournament::random(n, 1000 + seed);
    auto d = scc(g);
    auto reach = reach_oracle(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        bool mutual = reach[u].test(v) && reach[v].test(u);
        CHECK(mutual == (d.component_of[u] == d.component_of[v]));
      }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && d.component_of[u] < d.component_of[v]) CHECK(g.edge(u, v));
    std::size_t total = 0;
    for (const auto& comp : d.components) total += comp.size();
    CHECK(total == (std::size_t)n);
  }
}

TEST_CASE("is_transitive: examples and oracle agreement") {
  CHECK(is_transitive(Tournament::transitive(4)));
  CHECK_FALSE(is_transitive(Tournament::rotational(3)));
  CHECK_FALSE(is_transitive(Tournament::random(50, 9)));
  CHECK(is_transitive(Tournament::transitive(1)));

  for (int seed = 0; seed < 40; ++seed) {
    auto g = Tournament::random(3 + seed % 9, 2000 + seed);
    CHECK(is_transitive(g) == !has_three_cycle_scan(g));
  }
}

TEST_CASE("find_triangle: valid cycle exactly when non-transitive") {
  for (int seed = 0; seed < 60; ++seed) {
    int n = 3 + seed % 20;
    auto g = Tournament::random(n, 3000 + seed);
    auto tri = find_triangle(g);
    CHECK(tri.has_value() == !is_transitive(g));
    if (tri) {
      auto [a, b, c] = *tri;
      CHECK(g.edge(a, b));
      CHECK(g.edge(b, c));
      CHECK(g.edge(c, a));
    }
  }
  CHECK_FALSE(find_triangle(Tournament::transitive(12)).has_value());
}

TEST_CASE("find_transitive: dominance chains") {
  auto g = Tournament::random(16, 3);
  auto chain = find_transitive(g, 5);
  REQUIRE(chain.size() == 5);
  CHECK(is_transitive(g.induced(chain)));
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) CHECK(g.edge(chain[i], chain[j]));

  CHECK_THROWS_AS(find_transitive(Tournament::rotational(3), 3), TooFewVertices);

  // Every tournament on four vertices contains a transitive triple.
  for (unsigned code = 0; code < 64; ++code) {
    int bit = 0;
    int bits_by_pair[4][4] = {};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) bits_by_pair[i][j] = bit++;
    auto t = Tournament::from_orientation(
        4, [&](int i, int j) { return (code >> bits_by_pair[i][j]) & 1; });
    auto c = find_transitive(t, 3);
    CHECK(is_transitive(t.induced(c)));
  }
}

TEST_CASE("find_transitive: property over random instances") {
  for (int seed = 0; seed < 25; ++seed) {
    int k = 2 + seed % 4;
    int n = (1 << (k - 1)) + seed % 7;
    auto g = Tournament::random(n, 4000 + seed);
    auto chain = find_transitive(g, k);
    CHECK((int)chain.size() == k);
    CHECK(is_transitive(g.induced(chain)));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(g.edge(chain[i], chain[i + 1]));
  }
}
