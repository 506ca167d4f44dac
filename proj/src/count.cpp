#include "census/count.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>

#include "census/pairstats.hpp"

namespace census {

namespace {

inline int128 choose2(long long x) { return int128(x) * (x - 1) / 2; }
inline int128 choose3(long long x) { return int128(x) * (x - 1) * (x - 2) / 6; }

// Exceptions may not escape an OpenMP region; the per-vertex loops stash
// the first one and rethrow after the join.
class ExceptionCollector {
 public:
  template <typename F>
  void run(F&& body) noexcept {
    try {
      body();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (!eptr_) eptr_ = std::current_exception();
    }
  }
  void rethrow_if_any() {
    if (eptr_) std::rethrow_exception(eptr_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr eptr_;
};

// Per-edge pair statistics: dp = d+(u,v), dm = d-(u,v), pf = p(u,v),
// pb = p(v,u), for the directed edge u->v of each unordered pair.
template <typename F>
void for_each_edge_stats(const Tournament& g, F&& f) {
  int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int u = i, v = j;
      if (!g.edge(u, v)) std::swap(u, v);
      auto out_u = g.out_row(u), out_v = g.out_row(v);
      auto in_u = g.in_row(u), in_v = g.in_row(v);
      int dp = bits::popcount_and(out_u, out_v);
      int dm = bits::popcount_and(in_u, in_v);
      int pf = bits::popcount_and(out_u, in_v);
      int pb = bits::popcount_and(out_v, in_u);
      f(u, v, dp, dm, pf, pb);
    }
  }
}

struct Edge4Sums {
  int128 s1 = 0;  // sum C(d+(u,v),2)
  int128 s2 = 0;  // sum d+(u,v) d-(u,v)
  int128 s3 = 0;  // sum d+(u,v) p(u,v)
};

Edge4Sums edge4_sums(const Tournament& g) {
  int n = g.size();
  std::vector<Edge4Sums> rows(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i) {
    Edge4Sums acc;
    for (int j = i + 1; j < n; ++j) {
      int u = i, v = j;
      if (!g.edge(u, v)) std::swap(u, v);
      int dp = bits::popcount_and(g.out_row(u), g.out_row(v));
      int dm = bits::popcount_and(g.in_row(u), g.in_row(v));
      int pf = bits::popcount_and(g.out_row(u), g.in_row(v));
      acc.s1 += choose2(dp);
      acc.s2 += int128(dp) * dm;
      acc.s3 += int128(dp) * pf;
    }
    rows[i] = acc;
  }
  Edge4Sums total;
  for (const auto& r : rows) {
    total.s1 += r.s1;
    total.s2 += r.s2;
    total.s3 += r.s3;
  }
  return total;
}

}  // namespace

const std::vector<std::vector<long long>>& k4_matrix() {
  // Row 3 carries coefficient 3 on D: the anchor configuration
  // (u->v, u->w, v->w, u->x, x->v) occurs once in T4 but once per
  // rotation of D's triangle, i.e. three times per D copy.
  static const std::vector<std::vector<long long>> m = {
      {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 3, 0}, {1, 1, 1, 1}};
  return m;
}

const std::vector<std::vector<long long>>& table1_matrix() {
  // Columns: T5 H1 H1T H2 H2T H3 H4 H5 H6 H7 H8 R5.
  static const std::vector<std::vector<long long>> m = {
      {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},  //  1: C(d+,3)
      {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},  //  2: C(d-,3)
      {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},  //  3: C(p(v,u),3)
      {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},  //  4: C(p(u,v),3)
      {1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0},  //  5: C(d+,2) d-
      {1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0},  //  6: C(d-,2) d+
      {1, 0, 0, 2, 0, 3, 0, 0, 0, 0, 0, 0},  //  7: C(d+,2) p(u,v)
      {0, 0, 3, 0, 1, 0, 1, 1, 0, 0, 0, 0},  //  8: C(d+,2) p(v,u)
      {1, 0, 0, 0, 2, 3, 0, 0, 0, 0, 0, 0},  //  9: C(d-,2) p(u,v)
      {0, 3, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0},  // 10: C(d-,2) p(v,u)
      {0, 0, 0, 0, 0, 0, 2, 1, 0, 0, 1, 0},  // 11: C(p(u,v),2) p(v,u)
      {1, 0, 3, 0, 2, 0, 0, 0, 0, 0, 0, 0},  // 12: C(p(u,v),2) d-
      {1, 3, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0},  // 13: C(p(u,v),2) d+
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 5},  // 14: C(p(v,u),2) p(u,v)
      {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0},  // 15: C(p(v,u),2) d-
      {0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0},  // 16: C(p(v,u),2) d+
      {1, 3, 3, 0, 0, 0, 1, 3, 0, 1, 0, 0},  // 17: d+ d- p(u,v)
      {0, 0, 0, 1, 1, 3, 0, 0, 3, 2, 1, 5},  // 18: d+ d- p(v,u)
      {0, 0, 0, 0, 2, 0, 1, 1, 3, 2, 1, 0},  // 19: d+ p(u,v) p(v,u)
      {0, 0, 0, 2, 0, 0, 1, 1, 3, 2, 1, 0},  // 20: d- p(u,v) p(v,u)
  };
  return m;
}

std::array<int128, 20> table1_rhs(const Tournament& g) {
  int n = g.size();
  std::vector<std::array<int128, 20>> rows(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i) {
    std::array<int128, 20> acc{};
    for (int j = i + 1; j < n; ++j) {
      int u = i, v = j;
      if (!g.edge(u, v)) std::swap(u, v);
      long long dp = bits::popcount_and(g.out_row(u), g.out_row(v));
      long long dm = bits::popcount_and(g.in_row(u), g.in_row(v));
      long long pf = bits::popcount_and(g.out_row(u), g.in_row(v));
      long long pb = bits::popcount_and(g.out_row(v), g.in_row(u));
      acc[0] += choose3(dp);
      acc[1] += choose3(dm);
      acc[2] += choose3(pb);
      acc[3] += choose3(pf);
      acc[4] += choose2(dp) * dm;
      acc[5] += choose2(dm) * dp;
      acc[6] += choose2(dp) * pf;
      acc[7] += choose2(dp) * pb;
      acc[8] += choose2(dm) * pf;
      acc[9] += choose2(dm) * pb;
      acc[10] += choose2(pf) * pb;
      acc[11] += choose2(pf) * dm;
      acc[12] += choose2(pf) * dp;
      acc[13] += choose2(pb) * pf;
      acc[14] += choose2(pb) * dm;
      acc[15] += choose2(pb) * dp;
      acc[16] += int128(dp) * dm * pf;
      acc[17] += int128(dp) * dm * pb;
      acc[18] += int128(dp) * pf * pb;
      acc[19] += int128(dm) * pf * pb;
    }
    rows[i] = acc;
  }
  std::array<int128, 20> total{};
  for (const auto& r : rows)
    for (int t = 0; t < 20; ++t) total[t] += r[t];
  return total;
}

CensusSystem build_census_system(const Tournament& g, int k) {
  CensusSystem cs;
  cs.k = k;
  if (k == 4) {
    cs.coefficients = k4_matrix();
    auto s = edge4_sums(g);
    cs.rhs = {s.s1, s.s2, s.s3, binom(g.size(), 4)};
  } else if (k == 5) {
    cs.coefficients = table1_matrix();
    auto r = table1_rhs(g);
    cs.rhs.assign(r.begin(), r.end());
  } else {
    throw Error("build_census_system: k must be 4 or 5");
  }
  return cs;
}

CountVector count_3(const Tournament& g) {
  CountVector cv(3);
  int128 t3 = 0;
  for (int v = 0; v < g.size(); ++v) t3 += choose2(g.out_degree(v));
  cv[Pattern::T3] = t3;
  cv[Pattern::C3] = binom(g.size(), 3) - t3;
  if (cv[Pattern::C3] < 0) throw InternalInconsistency("count_3: negative C3 count");
  return cv;
}

CountVector count_4(const Tournament& g) {
  CountVector cv(4);
  if (g.size() < 4) return cv;
  auto s = edge4_sums(g);
  // Forward substitution through the triangular system.
  int128 t4 = s.s1;
  int128 x4 = s.s2 - t4;
  if ((s.s3 - t4) % 3 != 0)
    throw InternalInconsistency("count_4: D sum not divisible by 3");
  int128 d = (s.s3 - t4) / 3;
  int128 dt = binom(g.size(), 4) - t4 - x4 - d;
  if (t4 < 0 || x4 < 0 || d < 0 || dt < 0)
    throw InternalInconsistency("count_4: negative solution");
  cv[Pattern::T4] = t4;
  cv[Pattern::X4] = x4;
  cv[Pattern::D] = d;
  cv[Pattern::DT] = dt;
  return cv;
}

namespace {

std::vector<int> bit_vertices(std::span<const word> row, int n) {
  std::vector<int> vs;
  bits::for_each_bit(row, [&](int v) {
    if (v < n) vs.push_back(v);
  });
  return vs;
}

}  // namespace

int128 count_by_extension(const Tournament& g, Pattern p) {
  static constexpr Pattern kEligible[] = {Pattern::T5, Pattern::H1, Pattern::H1T,
                                          Pattern::H2, Pattern::H2T, Pattern::H3};
  if (std::find(std::begin(kEligible), std::end(kEligible), p) == std::end(kEligible))
    throw NoSourceOrSink(std::string(pattern_name(p)) + " is not counted by extension");
  const Catalog& cat = Catalog::instance();
  Tournament rep = cat.representative(p);
  int anchor = -1;
  bool from_source = false;
  for (int v = 0; v < 5; ++v) {
    if (rep.out_degree(v) == 4) {
      anchor = v;
      from_source = true;
      break;
    }
    if (rep.out_degree(v) == 0) anchor = v;
  }
  if (anchor < 0)
    throw NoSourceOrSink(std::string(pattern_name(p)) + " has neither source nor sink");
  std::vector<int> others;
  for (int v = 0; v < 5; ++v)
    if (v != anchor) others.push_back(v);
  Pattern target = cat.classify(rep.induced(others));

  int n = g.size();
  std::vector<int128> per_vertex(n, 0);
  ExceptionCollector errs;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (int v = 0; v < n; ++v) {
    errs.run([&, v] {
      auto row = from_source ? g.out_row(v) : g.in_row(v);
      auto nbrs = bit_vertices(row, n);
      if (nbrs.size() < 4) return;
      per_vertex[v] = count_4(g.induced(nbrs))[target];
    });
  }
  errs.rethrow_if_any();
  int128 total = 0;
  for (int128 c : per_vertex) total += c;
  return total;
}

int128 count_H8(const Tournament& g) {
  int n = g.size();
  std::vector<int128> per_vertex(n, 0);
  ExceptionCollector errs;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (int v = 0; v < n; ++v) {
    errs.run([&, v] {
      // Four-cycles of the bipartite graph keeping edges N+(v) -> N-(v):
      // sum over out-neighbor pairs of C(common successors inside N-(v), 2).
      auto outs = bit_vertices(g.out_row(v), n);
      auto mask_in = g.in_row(v);
      int128 acc = 0;
      for (std::size_t i = 0; i < outs.size(); ++i)
        for (std::size_t j = i + 1; j < outs.size(); ++j) {
          int codeg = bits::popcount_and3(g.out_row(outs[i]), g.out_row(outs[j]), mask_in);
          acc += choose2(codeg);
        }
      per_vertex[v] = acc;
    });
  }
  errs.rethrow_if_any();
  int128 total = 0;
  for (int128 c : per_vertex) total += c;
  return total;
}

namespace {

struct ExtensionRule {
  Pattern pattern;
  bool from_source;
  Pattern target;  // 4-vertex class left after stripping the anchor
};

// Anchor side and stripped 4-vertex class for the six extension-counted
// patterns, read off the catalog representatives.
const std::array<ExtensionRule, 6>& extension_rules() {
  static const std::array<ExtensionRule, 6> rules = [] {
    const Catalog& cat = Catalog::instance();
    std::array<ExtensionRule, 6> out;
    const Pattern list[] = {Pattern::T5, Pattern::H1, Pattern::H1T,
                            Pattern::H2, Pattern::H2T, Pattern::H3};
    for (int i = 0; i < 6; ++i) {
      Tournament rep = cat.representative(list[i]);
      int anchor = -1;
      bool src = false;
      for (int v = 0; v < 5; ++v) {
        if (rep.out_degree(v) == 4) {
          anchor = v;
          src = true;
          break;
        }
        if (rep.out_degree(v) == 0) anchor = v;
      }
      if (anchor < 0) throw InternalInconsistency("extension pattern lost its source/sink");
      std::vector<int> others;
      for (int v = 0; v < 5; ++v)
        if (v != anchor) others.push_back(v);
      out[i] = {list[i], src, cat.classify(rep.induced(others))};
    }
    return out;
  }();
  return rules;
}

}  // namespace

CountVector count_5(const Tournament& g) {
  CountVector cv(5);
  if (g.size() < 5) return cv;

  // One pass per vertex: census both neighborhoods once and reuse the
  // out-neighbor list for the H8 four-cycle count.
  const auto& rules = extension_rules();
  int n = g.size();
  struct PerVertex {
    std::array<int128, 6> ext{};
    int128 h8 = 0;
  };
  std::vector<PerVertex> partial(n);
  ExceptionCollector errs;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (int v = 0; v < n; ++v) {
    errs.run([&, v] {
      auto outs = bit_vertices(g.out_row(v), n);
      auto ins = bit_vertices(g.in_row(v), n);
      CountVector cout4(4), cin4(4);
      if (outs.size() >= 4) cout4 = count_4(g.induced(outs));
      if (ins.size() >= 4) cin4 = count_4(g.induced(ins));
      for (int i = 0; i < 6; ++i)
        partial[v].ext[i] = (rules[i].from_source ? cout4 : cin4)[rules[i].target];
      auto mask_in = g.in_row(v);
      for (std::size_t i = 0; i < outs.size(); ++i)
        for (std::size_t j = i + 1; j < outs.size(); ++j) {
          int codeg = bits::popcount_and3(g.out_row(outs[i]), g.out_row(outs[j]), mask_in);
          partial[v].h8 += choose2(codeg);
        }
    });
  }
  errs.rethrow_if_any();
  for (const auto& pv : partial) {
    for (int i = 0; i < 6; ++i) cv[rules[i].pattern] += pv.ext[i];
    cv[Pattern::H8] += pv.h8;
  }

  auto pats = patterns_for(5);
  auto sums = table1_rhs(g);
  const auto& coeff = table1_matrix();

  // Solve the five remaining counts from the nonsingular row subset,
  // moving the seven known columns to the right-hand side.
  Int128Matrix m(5, std::vector<int128>(5));
  std::vector<int128> b(5);
  for (int r = 0; r < 5; ++r) {
    int row = kSolveRows[r] - 1;
    b[r] = sums[row];
    for (int c = 0; c < 12; ++c) {
      Pattern pc = pats[c];
      auto it = std::find(kSolveColumns.begin(), kSolveColumns.end(), pc);
      if (it != kSolveColumns.end())
        m[r][it - kSolveColumns.begin()] = coeff[row][c];
      else
        b[r] -= int128(coeff[row][c]) * cv[pc];
    }
  }
  auto x = solve_exact(m, b);
  for (int i = 0; i < 5; ++i) {
    if (x[i] < 0) throw InternalInconsistency("count_5: negative count");
    cv[kSolveColumns[i]] = x[i];
  }

  // Every equation and the subset total must hold exactly.
  for (int r = 0; r < 20; ++r) {
    int128 lhs = 0;
    for (int c = 0; c < 12; ++c) lhs += int128(coeff[r][c]) * cv[pats[c]];
    if (lhs != sums[r])
      throw InternalInconsistency("count_5: equation " + std::to_string(r + 1) + " violated");
  }
  if (cv.total() != binom(g.size(), 5))
    throw InternalInconsistency("count_5: totals do not add up to C(n,5)");
  return cv;
}

QuasirandomnessReport quasirandomness_report(const Tournament& g) {
  QuasirandomnessReport r;
  r.t4 = count_4(g)[Pattern::T4];
  r.expected_num = 3 * binom(g.size(), 4);
  r.expected_den = 8;
  int128 a = r.expected_num, b = r.expected_den;
  while (b) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    r.expected_num /= a;
    r.expected_den /= a;
  }
  return r;
}

CountVector count_k(const Tournament& g, int k) {
  switch (k) {
    case 3:
      return count_3(g);
    case 4:
      return count_4(g);
    case 5:
      return count_5(g);
    default:
      throw Error("count: k must be 3, 4 or 5");
  }
}

}  // namespace census
