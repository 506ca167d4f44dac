#include "census/tournament.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "census/rng.hpp"

namespace census {

Tournament::Tournament(int n) : n_(n), out_(n, n), in_(n, n) {
  if (n < 1) throw Error("tournament needs at least one vertex");
}

void Tournament::finalize() {
  out_deg_.resize(n_);
  for (int v = 0; v < n_; ++v) out_deg_[v] = bits::popcount(out_.row(v));
}

namespace {

// One logical line of input; strips a trailing '\r'.
bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

long long parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw SyntaxError(std::string("bad ") + what + ": '" + tok + "'");
    return v;
  } catch (const SyntaxError&) {
    throw;
  } catch (...) {
    throw SyntaxError(std::string("bad ") + what + ": '" + tok + "'");
  }
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Tournament Tournament::from_text(std::istream& in) {
  std::string line;
  // Skip leading blank lines, then dispatch on the first token count:
  // one token = matrix header, two = edge list.
  do {
    if (!read_line(in, line)) throw SyntaxError("empty input");
  } while (blank(line));

  auto first = split_ws(line);
  if (first.size() == 1) {
    long long n = parse_int(first[0], "vertex count");
    if (n < 1) throw SyntaxError("vertex count must be >= 1");
    if (n > (1 << 20)) throw SyntaxError("vertex count implausibly large");
    Tournament t((int)n);
    for (int i = 0; i < n; ++i) {
      if (!read_line(in, line)) throw SyntaxError("matrix row " + std::to_string(i) + " missing");
      if ((long long)line.size() != n)
        throw SyntaxError("matrix row " + std::to_string(i) + " has length " +
                          std::to_string(line.size()) + ", expected " + std::to_string(n));
      for (int j = 0; j < n; ++j) {
        char c = line[j];
        if (c != '0' && c != '1')
          throw SyntaxError(std::string("matrix char must be 0 or 1, got '") + c + "'");
        if (c == '1') {
          if (i == j) throw NotATournament("nonzero diagonal entry at vertex " + std::to_string(i));
          t.out_.set(i, j);
        }
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool ij = t.out_.test(i, j), ji = t.out_.test(j, i);
        if (ij == ji)
          throw NotATournament("pair (" + std::to_string(i) + "," + std::to_string(j) +
                               ") has A[i][j]+A[j][i] != 1");
        if (ij)
          t.in_.set(j, i);
        else
          t.in_.set(i, j);
      }
    t.finalize();
    return t;
  }
  if (first.size() != 2) throw SyntaxError("expected 'n' or 'u v' on first line");

  // Edge list: collect all pairs, infer n, demand exact coverage.
  std::vector<std::pair<int, int>> edges;
  long long maxv = -1;
  auto add = [&](const std::vector<std::string>& toks) {
    long long u = parse_int(toks[0], "vertex"), v = parse_int(toks[1], "vertex");
    if (u < 0 || v < 0) throw SyntaxError("vertices are 0-based nonnegative integers");
    if (u == v) throw NotATournament("self-loop at vertex " + std::to_string(u));
    if (u > (1 << 20) || v > (1 << 20)) throw SyntaxError("vertex label implausibly large");
    edges.emplace_back((int)u, (int)v);
    maxv = std::max({maxv, u, v});
  };
  add(first);
  while (read_line(in, line)) {
    if (blank(line)) continue;
    auto toks = split_ws(line);
    if (toks.size() != 2) throw SyntaxError("edge line needs exactly two vertices: '" + line + "'");
    add(toks);
  }
  int n = (int)maxv + 1;
  Tournament t(n);
  for (auto [u, v] : edges) {
    if (t.out_.test(u, v) || t.out_.test(v, u))
      throw NotATournament("pair (" + std::to_string(u) + "," + std::to_string(v) +
                           ") listed more than once");
    t.set_edge(u, v);
  }
  if ((long long)edges.size() != (long long)n * (n - 1) / 2)
    throw NotATournament("edge list covers " + std::to_string(edges.size()) + " pairs, expected " +
                         std::to_string((long long)n * (n - 1) / 2));
  t.finalize();
  return t;
}

Tournament Tournament::from_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_text(in);
}

Tournament Tournament::random(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return from_orientation(n, [&](int, int) { return rng.coin(); });
}

Tournament Tournament::transitive(int n) {
  return from_orientation(n, [](int, int) { return true; });
}

Tournament Tournament::rotational(int n) {
  if (n < 1 || n % 2 == 0) throw Error("rotational tournament needs odd n");
  int half = (n - 1) / 2;
  return from_orientation(n, [&](int i, int j) {
    int d = (j - i) % n;
    return d <= half;  // i -> i+1 .. i+half (mod n)
  });
}

Tournament Tournament::transposed() const {
  Tournament t(n_);
  t.out_ = in_;
  t.in_ = out_;
  t.finalize();
  return t;
}

Tournament Tournament::induced(std::span<const int> vertices) const {
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (vs.empty()) throw BadSubset("empty vertex subset");
  if (vs.front() < 0 || vs.back() >= n_) throw BadSubset("vertex out of range");
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw BadSubset("duplicate vertex in subset");
  Tournament t((int)vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (edge(vs[i], vs[j]))
        t.set_edge((int)i, (int)j);
      else
        t.set_edge((int)j, (int)i);
  t.finalize();
  return t;
}

std::string Tournament::to_matrix_text() const {
  std::string s = std::to_string(n_);
  s.push_back('\n');
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) s.push_back(edge(i, j) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

std::string Tournament::to_edge_text() const {
  std::string s;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (edge(i, j))
        s += std::to_string(i) + " " + std::to_string(j);
      else
        s += std::to_string(j) + " " + std::to_string(i);
      s.push_back('\n');
    }
  return s;
}

std::vector<int> by_out_degree_desc(const Tournament& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.out_degree(a) > g.out_degree(b);
  });
  return order;
}

SccDecomposition scc(const Tournament& g) {
  // Every vertex of an earlier component beats every vertex of a later
  // one, so components are consecutive runs in descending out-degree
  // order; a prefix is a union of components exactly when all its cross
  // edges leave it, which the degree prefix-sum detects.
  int n = g.size();
  auto order = by_out_degree_desc(g);
  SccDecomposition d;
  d.component_of.assign(n, -1);
  long long prefix = 0;
  std::size_t start = 0;
  for (std::size_t m = 1; m <= order.size(); ++m) {
    prefix += g.out_degree(order[m - 1]);
    long long inside = (long long)m * (m - 1) / 2;
    long long cross = (long long)m * (n - (long long)m);
    if (prefix == inside + cross) {
      std::vector<int> comp(order.begin() + start, order.begin() + m);
      std::sort(comp.begin(), comp.end());
      for (int v : comp) d.component_of[v] = (int)d.components.size();
      d.components.push_back(std::move(comp));
      start = m;
    }
  }
  // Condensation order check: each vertex must dominate everything in
  // later components.
  BitVec later(n);
  for (auto it = d.components.rbegin(); it != d.components.rend(); ++it) {
    for (int v : *it)
      if (bits::first_bit_andnot(later.words(), g.out_row(v)) != -1)
        throw InternalInconsistency("scc: condensation order violated");
    for (int v : *it) later.set(v);
  }
  return d;
}

bool is_transitive(const Tournament& g) {
  int n = g.size();
  auto order = by_out_degree_desc(g);
  for (int i = 0; i < n; ++i)
    if (g.out_degree(order[i]) != n - 1 - i) return false;
  BitVec expected(n);  // what order[i] must dominate: exactly the later ones
  expected.fill_all();
  for (int i = 0; i < n; ++i) {
    expected.reset(order[i]);
    auto row = g.out_row(order[i]);
    for (std::size_t w = 0; w < expected.words().size(); ++w)
      if (row[w] != expected.words()[w]) return false;
  }
  return true;
}

std::optional<std::array<int, 3>> find_triangle(const Tournament& g) {
  // Scan degree-sorted pairs by increasing gap. A minimal-gap violation
  // (v_j -> v_i, i < j) closes a triangle through any vertex between; an
  // adjacent violation closes one through an out-neighbor of v_i that
  // beats v_j, which exists by the degree ordering.
  int n = g.size();
  auto order = by_out_degree_desc(g);
  for (int gap = 1; gap < n; ++gap) {
    for (int i = 0; i + gap < n; ++i) {
      int a = order[i], b = order[i + gap];
      if (!g.edge(b, a)) continue;
      if (gap >= 2) {
        int mid = order[i + 1];  // a -> mid and mid -> b by gap minimality
        return std::array<int, 3>{a, mid, b};
      }
      int w = bits::first_bit_and(g.out_row(a), g.in_row(b));
      if (w == -1)
        throw InternalInconsistency("find_triangle: adjacent violation without witness");
      return std::array<int, 3>{b, a, w};  // b->a, a->w, w->b
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> find_triangle_in(const Tournament& g,
                                                   std::span<const int> vertices) {
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  auto sub = g.induced(vs);
  auto tri = find_triangle(sub);
  if (!tri) return std::nullopt;
  return std::array<int, 3>{vs[(*tri)[0]], vs[(*tri)[1]], vs[(*tri)[2]]};
}

std::vector<int> find_transitive(const Tournament& g, int k) {
  if (k < 1) throw Error("find_transitive: k must be >= 1");
  long long need = 1LL << (k - 1);
  if (g.size() < need)
    throw TooFewVertices("find_transitive: n=" + std::to_string(g.size()) + " < 2^(k-1)=" +
                         std::to_string(need));
  int words = bits::words_for(g.size());
  BitVec current(g.size());
  current.fill_all();
  std::vector<int> chain;
  std::vector<word> tmp(words);
  for (int depth = k; depth > 0; --depth) {
    int v = bits::first_bit(current.words());
    if (v < 0) throw InternalInconsistency("find_transitive: ran out of vertices");
    current.reset(v);
    if (depth == 1) {
      chain.push_back(v);
      break;
    }
    auto cur = current.words();
    int inside = bits::popcount(cur);
    int out_sz = bits::popcount_and(cur, g.out_row(v));
    bool go_out = out_sz * 2 >= inside;
    auto side = go_out ? g.out_row(v) : g.in_row(v);
    for (int w = 0; w < words; ++w) tmp[w] = cur[w] & side[w];
    std::copy(tmp.begin(), tmp.end(), current.words().begin());
    chain.push_back(go_out ? v : ~v);  // mark in-side picks for later placement
  }
  // Rebuild dominance order: out-side picks go before the rest of the
  // chain, in-side picks after.
  std::vector<int> front, back;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    int c = chain[i];
    if (c >= 0)
      front.push_back(c);
    else
      back.push_back(~c);
  }
  std::vector<int> result = front;
  result.push_back(chain.back());
  result.insert(result.end(), back.rbegin(), back.rend());
  return result;
}

}  // namespace census
