#pragma once

#include <vector>

#include "census/errors.hpp"
#include "census/int128.hpp"

namespace census {

using Int128Matrix = std::vector<std::vector<int128>>;

// Rank over the rationals by fraction-free (Bareiss) elimination.
int exact_rank(Int128Matrix m);

// Determinant of a square matrix by Bareiss elimination; exact.
int128 exact_determinant(Int128Matrix m);

// Determinant by recursive cofactor expansion along the first row.
// Independent of the elimination route; used to cross-check it.
int128 cofactor_determinant(const Int128Matrix& m);

// Solves the square system m x = b exactly. Throws InternalInconsistency
// if m is singular or any solution entry is not an integer.
std::vector<int128> solve_exact(Int128Matrix m, std::vector<int128> b);

}  // namespace census
