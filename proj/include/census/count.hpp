#pragma once

#include <array>
#include <vector>

#include "census/catalog.hpp"
#include "census/exactla.hpp"
#include "census/int128.hpp"
#include "census/pattern.hpp"
#include "census/tournament.hpp"

namespace census {

// Coefficient matrix of the k=4 system (rows: the four edge-sum equations,
// columns T4, X4, D, DT):  1000 / 1100 / 1010 / 1111.
const std::vector<std::vector<long long>>& k4_matrix();

// The 20x12 coefficient matrix of the five-vertex census equations,
// columns in patterns_for(5) order. Rank 10; the column submatrix
// {H4,H5,H6,H7,R5} on rows {3,5,8,15,18} (1-based) is nonsingular.
const std::vector<std::vector<long long>>& table1_matrix();

// Rows (1-based) of the nonsingular square submatrix used by count_5.
inline constexpr std::array<int, 5> kSolveRows = {3, 5, 8, 15, 18};
inline constexpr std::array<Pattern, 5> kSolveColumns = {
    Pattern::H4, Pattern::H5, Pattern::H6, Pattern::H7, Pattern::R5};

// The 20 edge-sums: entry r-1 is sum over directed edges (u,v) of the
// degree-3 monomial in d+(u,v), d-(u,v), p(u,v), p(v,u) listed for
// equation r. Streams over pairs; no pair matrices are materialized.
std::array<int128, 20> table1_rhs(const Tournament& g);

// Coefficients + right-hand sides for k in {4,5}.
struct CensusSystem {
  int k = 0;
  std::vector<std::vector<long long>> coefficients;
  std::vector<int128> rhs;
};

CensusSystem build_census_system(const Tournament& g, int k);

// #T3 by sum of C(d+(v),2); #C3 as the complement.
CountVector count_3(const Tournament& g);

// Solves the triangular 4x4 edge-sum system by forward substitution.
// Total for every n (counts are zero when n < 4).
CountVector count_4(const Tournament& g);

// Count of a pattern with a source (or sink): strip it from the
// representative and sum count_4 of the 4-vertex remainder over every
// out- (or in-) neighborhood. Pattern must be one of
// {T5, H1, H1T, H2, H2T, H3}; else NoSourceOrSink.
int128 count_by_extension(const Tournament& g, Pattern p);

// #H8 = sum over v of four-cycles in the bipartite graph keeping edges
// from N+(v) to N-(v); such configurations correspond to H8 copies
// uniquely.
int128 count_H8(const Tournament& g);

// Full 12-class census: six counts by extension, H8 by four-cycles, the
// remaining five solved exactly from rows {3,5,8,15,18}; all 20 equations
// and the C(n,5) total are verified before returning.
CountVector count_5(const Tournament& g);

// #T4 against the random-model expectation (3/8)C(n,4). Report only.
struct QuasirandomnessReport {
  int128 t4 = 0;
  int128 expected_num = 0;
  int128 expected_den = 1;
};

QuasirandomnessReport quasirandomness_report(const Tournament& g);

// Dispatch on k in {3,4,5}.
CountVector count_k(const Tournament& g, int k);

}  // namespace census
