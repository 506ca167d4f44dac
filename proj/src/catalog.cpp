#include "census/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "census/count.hpp"
#include "census/rng.hpp"

namespace census {

namespace {

constexpr int kMaxCanonVertices = 7;

struct SmallAdj {
  int n = 0;
  bool a[kMaxCanonVertices][kMaxCanonVertices] = {};
};

SmallAdj to_small(const Tournament& t) {
  if (t.size() > kMaxCanonVertices)
    throw TooLarge("isomorphism machinery is limited to n <= 7, got n=" +
                   std::to_string(t.size()));
  SmallAdj s;
  s.n = t.size();
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) s.a[i][j] = i != j && t.edge(i, j);
  return s;
}

CanonCode pack_small(const SmallAdj& s) {
  CanonCode c = 0;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (s.a[i][j]) c |= CanonCode{1} << (i * s.n + j);
  return c;
}

CanonCode canonical_small(const SmallAdj& s) {
  int perm[kMaxCanonVertices];
  std::iota(perm, perm + s.n, 0);
  CanonCode best = ~CanonCode{0};
  do {
    CanonCode c = 0;
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j)
        if (s.a[perm[i]][perm[j]]) c |= CanonCode{1} << (i * s.n + j);
    best = std::min(best, c);
  } while (std::next_permutation(perm, perm + s.n));
  return best;
}

}  // namespace

CanonCode pack_code(const Tournament& t) { return pack_small(to_small(t)); }

CanonCode canonical_form(const Tournament& t) { return canonical_small(to_small(t)); }

Tournament tournament_from_code(int n, CanonCode code) {
  return Tournament::from_orientation(
      n, [&](int i, int j) { return (code >> (i * n + j)) & 1; });
}

long long automorphism_order(const Tournament& t) {
  SmallAdj s = to_small(t);
  int perm[kMaxCanonVertices];
  std::iota(perm, perm + s.n, 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < s.n && ok; ++i)
      for (int j = i + 1; j < s.n; ++j)
        if (s.a[i][j] != s.a[perm[i]][perm[j]]) {
          ok = false;
          break;
        }
    count += ok;
  } while (std::next_permutation(perm, perm + s.n));
  return count;
}

bool is_signature(const Tournament& t, std::span<const int> r) {
  if (t.size() > 5) throw TooLarge("signature search is limited to n <= 5");
  SmallAdj s = to_small(t);
  bool in_r[kMaxCanonVertices] = {};
  for (int v : r) {
    if (v < 0 || v >= s.n) throw BadSubset("signature vertex out of range");
    in_r[v] = true;
  }
  std::vector<std::pair<int, int>> outside;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      if (!in_r[i] && !in_r[j]) outside.emplace_back(i, j);
  CanonCode canon = canonical_small(s);
  for (unsigned f = 1; f < (1u << outside.size()); ++f) {
    SmallAdj flipped = s;
    for (std::size_t b = 0; b < outside.size(); ++b)
      if ((f >> b) & 1) {
        auto [i, j] = outside[b];
        std::swap(flipped.a[i][j], flipped.a[j][i]);
      }
    if (canonical_small(flipped) == canon) return false;
  }
  return true;
}

SignatureResult signature_size(const Tournament& t) {
  int n = t.size();
  if (n > 5) throw TooLarge("signature search is limited to n <= 5");
  for (int r = 0; r <= n; ++r) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != r) continue;
      std::vector<int> vs;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) vs.push_back(v);
      if (is_signature(t, vs)) return {r, vs};
    }
  }
  throw InternalInconsistency("signature_size: full vertex set must be a signature");
}

unsigned subset_code(const Tournament& g, std::span<const int> vs) {
  unsigned code = 0;
  int bit = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j, ++bit)
      if (g.edge(vs[i], vs[j])) code |= 1u << bit;
  return code;
}

namespace {

Tournament tournament_from_subset_code(int k, unsigned code) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  return Tournament::from_orientation(k, [&](int i, int j) {
    int idx = 0;
    while (pairs[idx] != std::pair{i, j}) ++idx;
    return (code >> idx) & 1;
  });
}

std::vector<int> degrees_desc(const Tournament& t) {
  std::vector<int> d(t.out_degrees().begin(), t.out_degrees().end());
  std::sort(d.rbegin(), d.rend());
  return d;
}

// The H8 anchor configuration: a vertex with exactly two out- and two
// in-neighbors where both out-neighbors dominate both in-neighbors.
bool has_h8_anchor(const Tournament& t) {
  if (t.size() != 5) return false;
  for (int e = 0; e < 5; ++e) {
    if (t.out_degree(e) != 2) continue;
    std::vector<int> outs, ins;
    for (int v = 0; v < 5; ++v) {
      if (v == e) continue;
      (t.edge(e, v) ? outs : ins).push_back(v);
    }
    bool dominate = true;
    for (int u : outs)
      for (int w : ins)
        if (!t.edge(u, w)) dominate = false;
    if (dominate) return true;
  }
  return false;
}

Tournament make_h1() {
  // u -> v, both dominating a directed triangle.
  return Tournament::from_orientation(5, [](int i, int j) {
    if (i <= 1) return true;              // 0->1, {0,1} -> {2,3,4}
    if (i == 2 && j == 3) return true;    // 2->3
    if (i == 3 && j == 4) return true;    // 3->4
    return false;                         // 2 vs 4: 4->2 closes the cycle
  });
}

Tournament make_h3() {
  // Source over a directed triangle over a sink.
  return Tournament::from_orientation(5, [](int i, int j) {
    if (i == 0) return true;              // source
    if (j == 4) return true;              // sink
    if (i == 1 && j == 2) return true;
    if (i == 2 && j == 3) return true;
    return false;                         // 1 vs 3: 3->1
  });
}

Tournament make_h8() {
  // Labels: 0=a (out-degree 3), 1=b, 2=c, 3=d (out-degree 1), 4=e.
  const std::pair<int, int> edges[] = {{4, 0}, {4, 1}, {0, 1}, {0, 2}, {0, 3},
                                       {1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 3}};
  return Tournament::from_orientation(5, [&](int i, int j) {
    for (auto [u, v] : edges)
      if (u == i && v == j) return true;
    return false;
  });
}

struct FrozenEntry {
  int pattern;
  std::uint64_t code;
  long long aut;
  int degs[5];
  int sig;
};

#include "catalog_frozen.inc"

}  // namespace

void Catalog::build_luts() {
  std::map<CanonCode, Pattern> by_code[6];
  for (const auto& e : entries_) by_code[pattern_order(e.pattern)][e.code] = e.pattern;
  auto build = [&](int k, std::vector<Pattern>& lut) {
    unsigned total = 1u << (k * (k - 1) / 2);
    lut.resize(total);
    for (unsigned code = 0; code < total; ++code) {
      Tournament t = tournament_from_subset_code(k, code);
      auto it = by_code[k].find(canonical_form(t));
      if (it == by_code[k].end())
        throw InternalInconsistency("catalog LUT: unclassified orientation");
      lut[code] = it->second;
    }
  };
  build(3, lut3_);
  build(4, lut4_);
  build(5, lut5_);
}

Pattern Catalog::classify_subset_code(int k, unsigned code) const {
  switch (k) {
    case 3:
      return lut3_[code];
    case 4:
      return lut4_[code];
    case 5:
      return lut5_[code];
    default:
      throw Error("classify_subset_code: k must be 3, 4 or 5");
  }
}

const CatalogEntry& Catalog::entry(Pattern p) const {
  for (const auto& e : entries_)
    if (e.pattern == p) return e;
  throw Error("catalog entry missing");
}

Tournament Catalog::representative(Pattern p) const {
  const auto& e = entry(p);
  return tournament_from_code(pattern_order(p), e.code);
}

Pattern Catalog::classify_code(int n, CanonCode canon) const {
  for (const auto& e : entries_)
    if (pattern_order(e.pattern) == n && e.code == canon) return e.pattern;
  throw InternalInconsistency("classify: code not in catalog (n=" + std::to_string(n) + ")");
}

Pattern Catalog::classify(const Tournament& t) const {
  int n = t.size();
  if (n < 3 || n > 5) throw Error("classify: n must be in {3,4,5}");
  return classify_code(n, canonical_form(t));
}

Catalog Catalog::calibrate() {
  Catalog cat;
  auto add = [&](Pattern p, const Tournament& rep) {
    CatalogEntry e;
    e.pattern = p;
    e.code = canonical_form(rep);
    e.aut_order = automorphism_order(rep);
    e.out_degrees = degrees_desc(rep);
    e.signature = signature_size(rep).size;
    cat.entries_.push_back(std::move(e));
  };

  // k = 3, 4: the classes are structurally unambiguous.
  add(Pattern::T3, Tournament::transitive(3));
  add(Pattern::C3, Tournament::rotational(3));
  add(Pattern::T4, Tournament::transitive(4));
  {
    // X4: the strongly connected one, via a directed four-cycle 0->1->2->3->0.
    auto x4 = Tournament::from_orientation(4, [](int i, int j) {
      if (j == i + 1) return true;
      if (i == 0 && j == 3) return false;  // 3->0
      return true;                         // 0->2, 1->3
    });
    add(Pattern::X4, x4);
    // D: source over a directed triangle; DT its transpose.
    auto d = Tournament::from_orientation(4, [](int i, int j) {
      if (i == 0) return true;
      if (i == 1 && j == 2) return true;
      if (i == 2 && j == 3) return true;
      return false;  // 3->1
    });
    add(Pattern::D, d);
    add(Pattern::DT, d.transposed());
  }
  {
    std::set<CanonCode> distinct4;
    for (unsigned code = 0; code < 64; ++code)
      distinct4.insert(canonical_form(tournament_from_subset_code(4, code)));
    if (distinct4.size() != 4)
      throw CalibrationAmbiguous("expected exactly 4 classes on 4 vertices");
  }

  // k = 5: bucket all 1024 labeled tournaments by canonical code.
  std::vector<CanonCode> raw_to_canon(1024);
  std::vector<CanonCode> classes;
  for (unsigned code = 0; code < 1024; ++code) {
    raw_to_canon[code] = canonical_form(tournament_from_subset_code(5, code));
    classes.push_back(raw_to_canon[code]);
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.size() != 12)
    throw CalibrationAmbiguous("expected exactly 12 classes on 5 vertices, got " +
                               std::to_string(classes.size()));
  auto bucket_of = [&](CanonCode c) {
    return int(std::lower_bound(classes.begin(), classes.end(), c) - classes.begin());
  };
  std::vector<Tournament> rep;
  for (CanonCode c : classes) rep.push_back(tournament_from_code(5, c));

  // Structurally pinned names.
  std::map<Pattern, int> assign;  // pattern -> bucket
  assign[Pattern::T5] = bucket_of(canonical_form(Tournament::transitive(5)));
  assign[Pattern::R5] = bucket_of(canonical_form(Tournament::rotational(5)));
  assign[Pattern::H1] = bucket_of(canonical_form(make_h1()));
  assign[Pattern::H1T] = bucket_of(canonical_form(make_h1().transposed()));
  assign[Pattern::H3] = bucket_of(canonical_form(make_h3()));
  assign[Pattern::H8] = bucket_of(canonical_form(make_h8()));
  {
    // The anchor configuration must single out exactly the H8 class.
    int anchored = 0;
    for (int b = 0; b < 12; ++b)
      if (has_h8_anchor(rep[b])) {
        ++anchored;
        if (b != assign[Pattern::H8])
          throw CalibrationAmbiguous("H8 anchor matched a different class");
      }
    if (anchored != 1) throw CalibrationAmbiguous("H8 anchor is not unique");
  }

  std::set<int> taken;
  for (auto& [p, b] : assign) {
    if (!taken.insert(b).second)
      throw CalibrationAmbiguous("structural assignments collide");
  }
  std::vector<int> rest;
  for (int b = 0; b < 12; ++b)
    if (!taken.count(b)) rest.push_back(b);
  if (rest.size() != 6) throw CalibrationAmbiguous("expected 6 unpinned classes");

  // Among the rest: exactly one transpose pair {H2, H2T}; the two classes
  // sharing H8's degree sequence are {H6, H7}; the remaining two share a
  // sequence of their own and are {H4, H5}.
  std::vector<int> pair_buckets, h67, h45;
  auto h8_degs = degrees_desc(rep[assign[Pattern::H8]]);
  for (int b : rest) {
    CanonCode tc = canonical_form(rep[b].transposed());
    if (tc != classes[b]) pair_buckets.push_back(b);
  }
  if (pair_buckets.size() != 2 ||
      bucket_of(canonical_form(rep[pair_buckets[0]].transposed())) != pair_buckets[1])
    throw CalibrationAmbiguous("expected exactly one transpose pair among unpinned classes");
  for (int b : rest) {
    if (b == pair_buckets[0] || b == pair_buckets[1]) continue;
    (degrees_desc(rep[b]) == h8_degs ? h67 : h45).push_back(b);
  }
  if (h67.size() != 2 || h45.size() != 2)
    throw CalibrationAmbiguous("degree-sequence structure of unpinned classes unexpected");
  if (degrees_desc(rep[h45[0]]) != degrees_desc(rep[h45[1]]))
    throw CalibrationAmbiguous("H4/H5 candidates do not share a degree sequence");

  // Pin the three pairs by requiring every census equation to hold
  // exactly, with brute-force class counts, on fixed random instances.
  const auto& coeff = table1_matrix();
  auto pats = patterns_for(5);
  struct Instance {
    std::array<int128, 12> bucket_counts{};
    std::array<int128, 20> rhs{};
  };
  std::vector<Instance> instances;
  for (int s = 0; s < 20; ++s) {
    Tournament g = Tournament::random(9, 9001 + s);
    Instance inst;
    int n = g.size();
    std::vector<int> vs(5);
    for (vs[0] = 0; vs[0] < n; ++vs[0])
      for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
        for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
          for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3])
            for (vs[4] = vs[3] + 1; vs[4] < n; ++vs[4])
              inst.bucket_counts[bucket_of(raw_to_canon[subset_code(g, vs)])] += 1;
    inst.rhs = table1_rhs(g);
    instances.push_back(inst);
  }

  int valid_count = 0;
  std::map<Pattern, int> valid_assign;
  for (int swap_pair = 0; swap_pair < 2; ++swap_pair)
    for (int swap45 = 0; swap45 < 2; ++swap45)
      for (int swap67 = 0; swap67 < 2; ++swap67) {
        auto candidate = assign;
        candidate[Pattern::H2] = pair_buckets[swap_pair];
        candidate[Pattern::H2T] = pair_buckets[1 - swap_pair];
        candidate[Pattern::H4] = h45[swap45];
        candidate[Pattern::H5] = h45[1 - swap45];
        candidate[Pattern::H6] = h67[swap67];
        candidate[Pattern::H7] = h67[1 - swap67];
        bool ok = true;
        for (const auto& inst : instances) {
          for (int r = 0; r < 20 && ok; ++r) {
            int128 lhs = 0;
            for (int c = 0; c < 12; ++c)
              lhs += int128(coeff[r][c]) * inst.bucket_counts[candidate[pats[c]]];
            if (lhs != inst.rhs[r]) ok = false;
          }
          if (!ok) break;
        }
        if (ok) {
          ++valid_count;
          valid_assign = candidate;
        }
      }
  if (valid_count != 1)
    throw CalibrationAmbiguous("census equations admit " + std::to_string(valid_count) +
                               " name assignments; expected exactly 1");

  for (Pattern p : pats) add(p, rep[valid_assign[p]]);

  // Orbit-stabilizer sanity: class sizes must add up to all labelings.
  long long total5 = 0;
  for (Pattern p : pats) total5 += 120 / cat.entry(p).aut_order;
  if (total5 != 1024)
    throw CalibrationAmbiguous("automorphism orders inconsistent with 1024 labelings");

  cat.build_luts();
  return cat;
}

const Catalog& Catalog::instance() {
  static const Catalog cat = [] {
    if (std::size(kFrozenCatalog) == 0) return calibrate();
    Catalog c;
    for (const auto& f : kFrozenCatalog) {
      CatalogEntry e;
      e.pattern = Pattern(f.pattern);
      e.code = f.code;
      e.aut_order = f.aut;
      int k = pattern_order(e.pattern);
      e.out_degrees.assign(f.degs, f.degs + k);
      e.signature = f.sig;
      c.entries_.push_back(std::move(e));
    }
    if (c.entries_.size() != kNumPatterns)
      throw InternalInconsistency("frozen catalog has wrong entry count");
    c.build_luts();
    return c;
  }();
  return cat;
}

std::string Catalog::to_json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) os << ",";
    first = false;
    os << "\n  {\"name\": \"" << pattern_name(e.pattern) << "\", \"vertices\": "
       << pattern_order(e.pattern) << ", \"code\": \"0x" << std::hex << e.code << std::dec
       << "\", \"aut_order\": " << e.aut_order << ", \"out_degrees\": [";
    for (std::size_t i = 0; i < e.out_degrees.size(); ++i)
      os << (i ? "," : "") << e.out_degrees[i];
    os << "], \"signature_size\": " << e.signature << "}";
  }
  os << "\n]\n";
  return os.str();
}

CountVector oracle_count(const Tournament& g, int k) {
  int n = g.size();
  int cap = k == 3 ? 1024 : k == 4 ? 256 : k == 5 ? 64 : -1;
  if (cap < 0) throw Error("oracle_count: k must be 3, 4 or 5");
  if (n > cap)
    throw TooLarge("oracle_count: n=" + std::to_string(n) + " exceeds cap " +
                   std::to_string(cap) + " for k=" + std::to_string(k));
  const Catalog& cat = Catalog::instance();
  CountVector cv(k);
  if (n < k) return cv;
  std::vector<int> slot(kNumPatterns, -1);
  auto pats = patterns_for(k);
  for (std::size_t i = 0; i < pats.size(); ++i) slot[int(pats[i])] = (int)i;

  std::vector<int> vs(k);
  // Nested subset walk; k is 3, 4 or 5.
  std::vector<int128> acc(pats.size(), 0);
  auto code_of = [&](std::span<const int> v) { return subset_code(g, v); };
  if (k == 3) {
    for (vs[0] = 0; vs[0] < n; ++vs[0])
      for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
        for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
          acc[slot[int(cat.classify_subset_code(3, code_of(vs)))]] += 1;
  } else if (k == 4) {
    for (vs[0] = 0; vs[0] < n; ++vs[0])
      for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
        for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
          for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3])
            acc[slot[int(cat.classify_subset_code(4, code_of(vs)))]] += 1;
  } else {
    for (vs[0] = 0; vs[0] < n; ++vs[0])
      for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
        for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
          for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3])
            for (vs[4] = vs[3] + 1; vs[4] < n; ++vs[4])
              acc[slot[int(cat.classify_subset_code(5, code_of(vs)))]] += 1;
  }
  cv.counts = std::move(acc);
  if (cv.total() != binom(n, k))
    throw InternalInconsistency("oracle_count: subset total mismatch");
  return cv;
}

}  // namespace census
