#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "census/catalog.hpp"
#include "census/tournament.hpp"

namespace census {

struct Witness {
  std::vector<int> vertices;
  Pattern pattern;
};

// Partition of V minus a directed triangle a->b->c->a by which triangle
// vertices each outside vertex dominates. n_sets is indexed by the 3-bit
// mask S (bit 0 = a, bit 1 = b, bit 2 = c): x is in n_sets[S] iff
// {d in {a,b,c} : x->d} = S.
struct TriangleDecomposition {
  std::array<int, 3> triangle;
  std::array<std::vector<int>, 8> n_sets;
};

TriangleDecomposition triangle_decomposition(const Tournament& g,
                                             std::array<int, 3> tri);

// Rolling state of the bad-triple scan over transitive orders
// X = x_1..x_p and Y = y_1..y_q. After advance(i):
//   alpha[m] = |{x_1..x_i} ∩ N-(y_m)|
//   beta[m]  = |{x_(i+1)..x_p} ∩ N+(y_m)|
struct ScanState {
  std::vector<int> alpha, beta;
  int i = 0;
};

// Evidence of D-freeness: the transitive order when g has no triangle,
// otherwise the triangle whose N_S decomposition passed all seven items.
struct DFreeCertificate {
  std::optional<std::array<int, 3>> triangle;
};

using DFreeResult = std::variant<DFreeCertificate, Witness>;

// Checks the seven-item D-free characterization against one directed
// triangle; on the first violated item returns the 4-vertex D given by
// that item's construction. O(n^2).
DFreeResult check_D_free(const Tournament& g);
DFreeResult check_D_free(const Tournament& g, std::array<int, 3> tri);

// T4: constant-time fact for n >= 8, brute force below.
std::optional<Witness> detect_T4(const Tournament& g);

// X4: present iff some strongly connected component has >= 4 vertices;
// the witness is a directed four-cycle grown from a triangle inside that
// component by one pancyclicity extension step. O(n^2).
std::optional<Witness> detect_X4(const Tournament& g);

std::optional<Witness> detect_D(const Tournament& g);
std::optional<Witness> detect_DT(const Tournament& g);

std::optional<Witness> detect_pattern(const Tournament& g, Pattern p);

}  // namespace census
