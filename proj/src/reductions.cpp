#include "census/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>

#include "census/count.hpp"
#include "census/rng.hpp"

namespace census {

void VertexPartition::validate(int n) const {
  std::vector<char> seen(n, 0);
  for (const auto& part : parts)
    for (int v : part) {
      if (v < 0 || v >= n) throw PartitionMismatch("partition vertex out of range");
      if (seen[v]++) throw PartitionMismatch("partition parts overlap");
    }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw PartitionMismatch("partition does not cover every vertex");
}

namespace {

// Ordered tuples of distinct vertices inducing the labeled pattern of T
// restricted to `labels` (tuple position i carries labels[i]).
std::vector<std::array<int, 2>> labeled_copies(const Tournament& g, const Tournament& t,
                                               std::span<const int> labels) {
  std::vector<std::array<int, 2>> out;
  int n = g.size();
  if (labels.size() == 1) {
    for (int v = 0; v < n; ++v) out.push_back({v, -1});
  } else if (labels.size() == 2) {
    bool fwd = t.edge(labels[0], labels[1]);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        if (g.edge(x, y) == fwd && g.edge(y, x) == !fwd) out.push_back({x, y});
      }
  } else {
    throw Error("labeled_copies: blocks of size 1 or 2 only");
  }
  return out;
}

bool tuples_compatible(const Tournament& g, const Tournament& t,
                       std::span<const int> la, const std::array<int, 2>& ta,
                       std::span<const int> lb, const std::array<int, 2>& tb) {
  int sa = ta[1] < 0 ? 1 : 2, sb = tb[1] < 0 ? 1 : 2;
  for (int i = 0; i < sa; ++i)
    for (int j = 0; j < sb; ++j) {
      if (ta[i] == tb[j]) return false;
      if (g.edge(ta[i], tb[j]) != t.edge(la[i], lb[j])) return false;
    }
  return true;
}

}  // namespace

int128 generic_count(const Tournament& g, const Tournament& t) {
  int k = t.size();
  int n = g.size();
  if (k > 6) throw TooLarge("generic_count handles patterns on at most 6 vertices");
  if (n < k) return 0;
  if (k == 1) return n;
  if (k == 2) return binom(n, 2);

  int a1 = k / 3, a2 = (k - 1 + 2) / 3, a3 = (k + 2) / 3;
  std::vector<int> l1(a1), l2(a2), l3(a3);
  std::iota(l1.begin(), l1.end(), 0);
  std::iota(l2.begin(), l2.end(), a1);
  std::iota(l3.begin(), l3.end(), a1 + a2);

  auto s1 = labeled_copies(g, t, l1);
  auto s2 = labeled_copies(g, t, l2);
  auto s3 = labeled_copies(g, t, l3);
  // Two boolean matrices indexed by the middle block; guard the memory.
  unsigned long long bits_needed =
      (unsigned long long)s1.size() * s2.size() + (unsigned long long)s2.size() * s3.size();
  if (bits_needed > (1ull << 33))
    throw TooLarge("generic_count: compatibility matrices would exceed 1 GiB");

  BitMatrix q1((int)s1.size(), (int)s2.size());
  BitMatrix q2t((int)s3.size(), (int)s2.size());
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t j = 0; j < s2.size(); ++j)
      if (tuples_compatible(g, t, l1, s1[i], l2, s2[j])) q1.set((int)i, (int)j);
  for (std::size_t i = 0; i < s3.size(); ++i)
    for (std::size_t j = 0; j < s2.size(); ++j)
      if (tuples_compatible(g, t, l2, s2[j], l3, s3[i])) q2t.set((int)i, (int)j);

  int128 labeled_total = 0;
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t j = 0; j < s3.size(); ++j)
      if (tuples_compatible(g, t, l1, s1[i], l3, s3[j]))
        labeled_total += bits::popcount_and(q1.row((int)i), q2t.row((int)j));

  long long aut = automorphism_order(t);
  if (labeled_total % aut != 0)
    throw InternalInconsistency("generic_count: labeled total " + to_string(labeled_total) +
                                " not divisible by |Aut| = " + std::to_string(aut));
  return labeled_total / aut;
}

int128 count_colorful(const Tournament& g, const Tournament& t, const VertexPartition& p) {
  int k = t.size();
  if ((int)p.size() != k)
    throw PartitionMismatch("partition has " + std::to_string(p.size()) + " parts, pattern has " +
                            std::to_string(k) + " vertices");
  p.validate(g.size());
  if (k < 3 || k > 5) throw Error("count_colorful: pattern must have 3 to 5 vertices");
  Pattern target = Catalog::instance().classify(t);

  int128 m = 0;
  for (unsigned s = 1; s < (1u << k); ++s) {
    std::vector<int> verts;
    for (int i = 0; i < k; ++i)
      if ((s >> i) & 1)
        verts.insert(verts.end(), p.parts[i].begin(), p.parts[i].end());
    int128 f = 0;
    if (!verts.empty()) f = count_k(g.induced(verts), k)[target];
    int sign = (k - std::popcount(s)) % 2 ? -1 : 1;
    m += sign * f;
  }
  if (m < 0) throw InternalInconsistency("count_colorful: negative inclusion-exclusion result");
  return m;
}

namespace {

// One vertex per part, parts are independent sets: pick a vertex of each
// part in order, intersecting the common-neighborhood mask.
bool colorful_clique_search(const BitMatrix& adj, const std::vector<BitVec>& part_masks,
                            int level, BitVec& allowed, std::vector<int>& chosen) {
  if (level == (int)part_masks.size()) return true;
  std::vector<word> cand(allowed.words().size());
  auto pm = part_masks[level].words();
  auto aw = allowed.words();
  for (std::size_t w = 0; w < cand.size(); ++w) cand[w] = pm[w] & aw[w];
  bool found = false;
  bits::for_each_bit(cand, [&](int v) {
    if (found) return;
    BitVec next = allowed;
    auto nw = next.words();
    auto row = adj.row(v);
    for (std::size_t w = 0; w < nw.size(); ++w) nw[w] &= row[w];
    chosen.push_back(v);
    if (colorful_clique_search(adj, part_masks, level + 1, next, chosen))
      found = true;
    else
      chosen.pop_back();
  });
  return found;
}

}  // namespace

std::optional<Witness> color_coding_detect_trials(const Tournament& g, const Tournament& t,
                                                  long long trials, std::uint64_t seed) {
  int k = t.size();
  int n = g.size();
  if (k < 3 || k > 5) throw Error("color_coding_detect: pattern must have 3 to 5 vertices");
  if (n < k) return std::nullopt;
  Pattern target = Catalog::instance().classify(t);
  SplitMix64 rng(seed);
  std::vector<int> part(n);
  for (long long trial = 0; trial < trials; ++trial) {
    for (int v = 0; v < n; ++v) part[v] = (int)rng.below(k);
    // Consistency graph: undirected edge iff the tournament edge direction
    // matches the pattern edge between the endpoint parts.
    BitMatrix adj(n, n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (part[u] == part[v]) continue;
        bool present = g.edge(u, v) ? t.edge(part[u], part[v]) : t.edge(part[v], part[u]);
        if (present) {
          adj.set(u, v);
          adj.set(v, u);
        }
      }
    std::vector<BitVec> part_masks(k, BitVec(n));
    for (int v = 0; v < n; ++v) part_masks[part[v]].set(v);
    BitVec allowed(n);
    allowed.fill_all();
    std::vector<int> chosen;
    if (colorful_clique_search(adj, part_masks, 0, allowed, chosen)) {
      Witness w{chosen, target};
      if (Catalog::instance().classify(g.induced(w.vertices)) != target)
        throw InternalInconsistency("color coding decoded a non-copy");
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> color_coding_detect(const Tournament& g, const Tournament& t,
                                           double delta, std::uint64_t seed) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must be in (0,1)");
  int k = t.size();
  double kk = std::pow(double(k), double(k));
  long long trials = (long long)std::ceil(kk * std::log(1.0 / delta));
  return color_coding_detect_trials(g, t, trials, seed);
}

UndirectedGraph UndirectedGraph::from_text(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw SyntaxError(std::string("missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };
  next_line("vertex count");
  long long n;
  try {
    n = std::stoll(line);
  } catch (...) {
    throw SyntaxError("bad vertex count: '" + line + "'");
  }
  if (n < 1 || n > (1 << 20)) throw SyntaxError("vertex count out of range");
  UndirectedGraph g((int)n);
  for (int i = 0; i < n; ++i) {
    next_line("matrix row");
    if ((long long)line.size() != n) throw SyntaxError("matrix row has wrong length");
    for (int j = 0; j < n; ++j) {
      char c = line[j];
      if (c != '0' && c != '1') throw SyntaxError("matrix char must be 0 or 1");
      if (c == '1') {
        if (i == j) throw SyntaxError("diagonal must be 0");
        g.adj_.set(i, j);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adj_.test(i, j) != g.adj_.test(j, i))
        throw SyntaxError("undirected matrix must be symmetric");
  return g;
}

UndirectedGraph UndirectedGraph::random(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  UndirectedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.coin()) g.add_edge(i, j);
  return g;
}

bool UndirectedGraph::has_triangle() const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v) && bits::any_and(row(u), row(v))) return true;
  return false;
}

bool clique_detect_via_count(const UndirectedGraph& g, int m, const Tournament& t,
                             std::span<const int> r, std::uint64_t seed, double delta) {
  int k = t.size();
  if ((int)r.size() != k - m)
    throw Error("clique_detect: |V(T)| - |R| must equal m");
  if (!is_signature(t, r)) throw NotASignature("R is not a signature of T");
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must be in (0,1)");
  if (m < 1) throw Error("clique size must be >= 1");
  int n = g.size();
  if (n < m) return false;

  // Relabel so the signature occupies labels 0..r-1.
  std::vector<int> order(r.begin(), r.end());
  std::sort(order.begin(), order.end());
  for (int v = 0; v < k; ++v)
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  Tournament tt = Tournament::from_orientation(
      k, [&](int i, int j) { return t.edge(order[i], order[j]); });

  int rr = k - m;
  long long trials =
      (long long)std::ceil(std::pow(double(m), double(m)) * std::log(1.0 / delta));
  SplitMix64 rng(seed);
  std::vector<int> part(n);
  for (long long trial = 0; trial < trials; ++trial) {
    for (int v = 0; v < n; ++v) part[v] = rr + (int)rng.below(m);
    auto part_of = [&](int x) { return x < n ? part[x] : x - n; };
    // The lemma's tournament on n + r vertices: signature labels become
    // fresh singletons, orientation between free parts encodes graph
    // adjacency, intra-part edges go by ascending label.
    Tournament star = Tournament::from_orientation(n + rr, [&](int x, int y) {
      int i = part_of(x), j = part_of(y);
      if (i == j) return true;  // ascending label
      bool dir = tt.edge(i, j);
      if (i < rr || j < rr) return dir;
      return g.adjacent(x, y) ? dir : !dir;
    });
    VertexPartition vp;
    vp.parts.assign(k, {});
    for (int s = 0; s < rr; ++s) vp.parts[s] = {n + s};
    for (int v = 0; v < n; ++v) vp.parts[part[v]].push_back(v);
    if (count_colorful(star, tt, vp) > 0) return true;
  }
  return false;
}

std::optional<CliquePatternChoice> find_clique_pattern(int m) {
  const Catalog& cat = Catalog::instance();
  for (const auto& e : cat.entries()) {
    if (pattern_order(e.pattern) - e.signature == m) {
      auto rep = cat.representative(e.pattern);
      auto sig = signature_size(rep);
      if (sig.size != e.signature)
        throw InternalInconsistency("catalog signature size drifted");
      return CliquePatternChoice{e.pattern, sig.witness};
    }
  }
  return std::nullopt;
}

}  // namespace census
