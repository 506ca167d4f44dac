#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "census/detect.hpp"
#include "census/int128.hpp"
#include "census/tournament.hpp"

namespace census {

// Disjoint vertex sets covering V(G); empty parts allowed.
struct VertexPartition {
  std::vector<std::vector<int>> parts;

  std::size_t size() const { return parts.size(); }
  void validate(int n) const;  // throws PartitionMismatch
};

// Tripartite matrix-product count of T-copies in G (k = |V(T)| <= 6):
// labels split into three blocks, labeled block copies enumerated, the
// middle compatibility matrices multiplied, labeled total divided by
// |Aut(T)|. Memory guarded by TooLarge.
int128 generic_count(const Tournament& g, const Tournament& t);

// Copies of T with exactly one vertex in each part, by inclusion-exclusion
// over part unions. |P| must equal |V(T)| (3..5); inner counts use the
// census engines.
int128 count_colorful(const Tournament& g, const Tournament& t,
                      const VertexPartition& p);

// Randomized one-sided detection: ceil(k^k ln(1/delta)) trials, each
// sampling a uniform k-partition, building the undirected consistency
// graph and searching it for a K_k (parts are independent sets). A
// returned witness is always a genuine copy; None is wrong with
// probability <= delta.
std::optional<Witness> color_coding_detect(const Tournament& g,
                                           const Tournament& t, double delta,
                                           std::uint64_t seed);
// Same, with the trial budget forced (testing hook).
std::optional<Witness> color_coding_detect_trials(const Tournament& g,
                                                  const Tournament& t,
                                                  long long trials,
                                                  std::uint64_t seed);

// Simple undirected graph as a symmetric bit matrix.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(int n) : n_(n), adj_(n, n) {}
  static UndirectedGraph from_text(std::istream& in);
  static UndirectedGraph random(int n, std::uint64_t seed);  // p = 1/2

  int size() const { return n_; }
  void add_edge(int u, int v) {
    adj_.set(u, v);
    adj_.set(v, u);
  }
  bool adjacent(int u, int v) const { return adj_.test(u, v); }
  std::span<const word> row(int v) const { return adj_.row(v); }
  bool has_triangle() const;

 private:
  int n_ = 0;
  BitMatrix adj_;
};

// K_m detection in an undirected graph via tournament counting: T must
// have |V(T)| - |R| = m with R a signature of T. Randomized trials build
// the lemma's tournament G* (signature labels as fresh singleton parts,
// graph edges deciding the orientation between free parts, intra-part
// edges by ascending label) and test count_colorful > 0. One-sided.
bool clique_detect_via_count(const UndirectedGraph& g, int m,
                             const Tournament& t, std::span<const int> r,
                             std::uint64_t seed, double delta = 1e-3);

// First catalog pattern (with its signature witness) usable for K_m
// detection, i.e. |V(T)| - sig(T) = m; nullopt if none exists for k <= 5.
struct CliquePatternChoice {
  Pattern pattern;
  std::vector<int> signature;
};
std::optional<CliquePatternChoice> find_clique_pattern(int m);

}  // namespace census
