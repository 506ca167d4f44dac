#include <doctest.h>

#include <map>
#include <set>

#include "census/catalog.hpp"
#include "census/count.hpp"

using namespace census;

namespace {

Tournament relabeled(const Tournament& t, const std::vector<int>& perm) {
  return Tournament::from_orientation(
      t.size(), [&](int i, int j) { return t.edge(perm[i], perm[j]); });
}

Tournament subset_tournament(int k, unsigned code) {
  int bit = 0;
  int idx[8][8] = {};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) idx[i][j] = bit++;
  return Tournament::from_orientation(k, [&](int i, int j) { return (code >> idx[i][j]) & 1; });
}

}  // namespace

TEST_CASE("canonical_form: isomorphism invariance") {
  auto c3 = Tournament::rotational(3);
  CHECK(canonical_form(c3) == canonical_form(c3.transposed()));

  auto t4 = Tournament::transitive(4);
  CHECK(canonical_form(t4) == canonical_form(relabeled(t4, {2, 0, 3, 1})));
  CHECK(canonical_form(t4) == canonical_form(relabeled(t4, {3, 1, 0, 2})));

  std::set<CanonCode> codes4;
  for (unsigned code = 0; code < 64; ++code)
    codes4.insert(canonical_form(subset_tournament(4, code)));
  CHECK(codes4.size() == 4);  // exactly four classes on four vertices

  CHECK_THROWS_AS(canonical_form(Tournament::transitive(8)), TooLarge);
}

TEST_CASE("classify: named classes") {
  const Catalog& cat = Catalog::instance();
  CHECK(cat.classify(Tournament::rotational(3)) == Pattern::C3);
  CHECK(cat.classify(Tournament::transitive(3)) == Pattern::T3);
  CHECK(cat.classify(Tournament::transitive(5)) == Pattern::T5);
  CHECK(cat.classify(Tournament::rotational(5)) == Pattern::R5);

  // The strongly connected 4-vertex tournament has out-degrees {2,2,1,1}.
  auto x4 = cat.representative(Pattern::X4);
  CHECK(cat.entry(Pattern::X4).out_degrees == std::vector<int>{2, 2, 1, 1});
  CHECK(scc(x4).components.size() == 1);

  // D = source over a triangle, DT its transpose.
  auto d = cat.representative(Pattern::D);
  CHECK(cat.classify(d.transposed()) == Pattern::DT);
  bool has_source = false;
  for (int v = 0; v < 4; ++v) has_source |= d.out_degree(v) == 3;
  CHECK(has_source);
}

TEST_CASE("automorphism_order: rigid and symmetric classes") {
  for (int k = 2; k <= 7; ++k) CHECK(automorphism_order(Tournament::transitive(k)) == 1);
  CHECK(automorphism_order(Tournament::rotational(3)) == 3);
  CHECK(automorphism_order(Tournament::rotational(5)) == 5);
  CHECK(automorphism_order(Tournament::rotational(7)) == 7);

  // Orbit-stabilizer: class sizes add up to all labeled tournaments.
  const Catalog& cat = Catalog::instance();
  long long sum4 = 0, sum5 = 0;
  for (Pattern p : patterns_for(4)) sum4 += 24 / cat.entry(p).aut_order;
  for (Pattern p : patterns_for(5)) sum5 += 120 / cat.entry(p).aut_order;
  CHECK(sum4 == 64);
  CHECK(sum5 == 1024);
}

TEST_CASE("H8: rigid, but edge reversal at the anchor pair is isomorphism-preserving") {
  // |Aut(H8)| = 1: both endpoints of the top pair are pinned by degrees
  // and the anchor vertex. What the four-cycle counting argument needs is
  // weaker: reversing the edge between the two out-neighbors (or the two
  // in-neighbors) of the anchor yields a tournament isomorphic to H8.
  const Catalog& cat = Catalog::instance();
  auto h8 = cat.representative(Pattern::H8);
  CHECK(cat.entry(Pattern::H8).aut_order == 1);

  int anchor = -1;
  std::vector<int> outs, ins;
  for (int e = 0; e < 5; ++e) {
    outs.clear();
    ins.clear();
    for (int v = 0; v < 5; ++v) {
      if (v == e) continue;
      (h8.edge(e, v) ? outs : ins).push_back(v);
    }
    if (outs.size() == 2 && ins.size() == 2 && h8.edge(outs[0], ins[0]) &&
        h8.edge(outs[0], ins[1]) && h8.edge(outs[1], ins[0]) && h8.edge(outs[1], ins[1])) {
      anchor = e;
      break;
    }
  }
  REQUIRE(anchor >= 0);
  auto flip = [&](int a, int b) {
    return Tournament::from_orientation(5, [&](int i, int j) {
      if ((i == a && j == b) || (i == b && j == a)) return !h8.edge(i, j);
      return h8.edge(i, j);
    });
  };
  CHECK(canonical_form(flip(outs[0], outs[1])) == canonical_form(h8));
  CHECK(canonical_form(flip(ins[0], ins[1])) == canonical_form(h8));
}

TEST_CASE("signature sizes") {
  const Catalog& cat = Catalog::instance();
  CHECK(cat.entry(Pattern::T3).signature == 1);
  CHECK(cat.entry(Pattern::C3).signature == 1);
  for (Pattern p : patterns_for(4)) CHECK(cat.entry(p).signature >= 2);
  CHECK(cat.entry(Pattern::T4).signature <= 2);

  // T3's signature: the middle vertex alone.
  CHECK(is_signature(Tournament::transitive(3), std::vector<int>{1}));
  // Any single vertex of C3.
  CHECK(is_signature(Tournament::rotational(3), std::vector<int>{0}));
  // Even-labeled vertices of a transitive tournament form a signature.
  CHECK(is_signature(Tournament::transitive(4), std::vector<int>{1, 3}));
  CHECK(is_signature(Tournament::transitive(5), std::vector<int>{1, 3}));
  // The empty set never is, once there is an edge to flip.
  CHECK_FALSE(is_signature(Tournament::transitive(2), std::vector<int>{}));
  CHECK_FALSE(is_signature(Tournament::transitive(4), std::vector<int>{}));

  auto sig = signature_size(Tournament::transitive(3));
  CHECK(sig.size == 1);
  CHECK(sig.witness == std::vector<int>{1});
}

TEST_CASE("calibration: classes, uniqueness, frozen table") {
  Catalog cat = Catalog::calibrate();  // throws CalibrationAmbiguous on failure
  int k5 = 0;
  for (const auto& e : cat.entries())
    if (pattern_order(e.pattern) == 5) ++k5;
  CHECK(k5 == 12);
  CHECK(cat.entries().size() == 18);

  // Frozen constants must match a fresh calibration exactly.
  const Catalog& frozen = Catalog::instance();
  for (const auto& e : cat.entries()) {
    const auto& f = frozen.entry(e.pattern);
    CHECK(f.code == e.code);
    CHECK(f.aut_order == e.aut_order);
    CHECK(f.out_degrees == e.out_degrees);
    CHECK(f.signature == e.signature);
  }

  CHECK(cat.entry(Pattern::T5).out_degrees == std::vector<int>{4, 3, 2, 1, 0});
  // Degree-sequence coincidences.
  CHECK(cat.entry(Pattern::H4).out_degrees == cat.entry(Pattern::H5).out_degrees);
  CHECK(cat.entry(Pattern::H6).out_degrees == cat.entry(Pattern::H7).out_degrees);
  CHECK(cat.entry(Pattern::H7).out_degrees == cat.entry(Pattern::H8).out_degrees);
}

TEST_CASE("transpose names hold for all 1024 labeled 5-vertex tournaments") {
  const Catalog& cat = Catalog::instance();
  int self_transpose = 0;
  for (Pattern p : patterns_for(5)) {
    auto rep = cat.representative(p);
    if (cat.classify(rep.transposed()) == p) ++self_transpose;
  }
  CHECK(self_transpose == 8);  // all but H1/H1T and H2/H2T

  for (unsigned code = 0; code < 1024; ++code) {
    auto t = subset_tournament(5, code);
    CHECK(cat.classify(t.transposed()) == transpose_pattern(cat.classify(t)));
  }
}

TEST_CASE("oracle_count: closed cases") {
  auto t6 = Tournament::transitive(6);
  auto cv = oracle_count(t6, 4);
  CHECK(cv[Pattern::T4] == 15);
  CHECK(cv[Pattern::X4] == 0);
  CHECK(cv[Pattern::D] == 0);
  CHECK(cv[Pattern::DT] == 0);

  auto r5 = Tournament::rotational(5);
  auto cv5 = oracle_count(r5, 5);
  CHECK(cv5[Pattern::R5] == 1);
  CHECK(cv5.total() == 1);

  // Independent route: every 4-subset of R5 has within-subset out-degrees
  // {2,2,1,1}, the strongly connected class.
  auto cv4 = oracle_count(r5, 4);
  CHECK(cv4[Pattern::X4] == 5);
  CHECK(cv4.total() == 5);
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<int> vs;
    for (int v = 0; v < 5; ++v)
      if (v != skip) vs.push_back(v);
    auto sub = r5.induced(vs);
    std::multiset<int> degs(sub.out_degrees().begin(), sub.out_degrees().end());
    CHECK(degs == std::multiset<int>{1, 1, 2, 2});
  }
}

TEST_CASE("oracle_count: totals and caps") {
  for (int seed = 0; seed < 10; ++seed) {
    auto g = Tournament::random(6 + seed, 500 + seed);
    for (int k = 3; k <= 5; ++k) CHECK(oracle_count(g, k).total() == binom(g.size(), k));
  }
  CHECK_THROWS_AS(oracle_count(Tournament::random(65, 1), 5), TooLarge);
  CHECK(oracle_count(Tournament::transitive(3), 5).total() == 0);
}

TEST_CASE("calibrated counts satisfy equation 18 on random instances") {
  // Brute-force class counts must satisfy Table row 18:
  // H2 + H2T + 3 H3 + 3 H6 + 2 H7 + H8 + 5 R5 = sum d+ d- p(v,u).
  for (int s = 0; s < 20; ++s) {
    auto g = Tournament::random(9, 777 + s);
    auto cv = oracle_count(g, 5);
    auto rhs = table1_rhs(g);
    int128 lhs = cv[Pattern::H2] + cv[Pattern::H2T] + 3 * cv[Pattern::H3] +
                 3 * cv[Pattern::H6] + 2 * cv[Pattern::H7] + cv[Pattern::H8] +
                 5 * cv[Pattern::R5];
    CHECK(lhs == rhs[17]);
  }
}
