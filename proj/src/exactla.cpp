#include "census/exactla.hpp"

#include <utility>

namespace census {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Every intermediate entry
// is an exact integer; pivots along the diagonal end up as leading-minor
// determinants. Returns (rank, determinant-if-square, echelon matrix).
struct BareissResult {
  int rank = 0;
  int128 det = 0;
  Int128Matrix m;
  std::vector<int> pivot_cols;
  int sign = 1;
};

BareissResult bareiss(Int128Matrix m) {
  BareissResult r;
  int rows = (int)m.size();
  int cols = rows ? (int)m[0].size() : 0;
  int128 prev = 1;
  int rank = 0;
  int sign = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      sign = -sign;
    }
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    r.pivot_cols.push_back(col);
    ++rank;
  }
  r.rank = rank;
  r.sign = sign;
  r.m = std::move(m);
  if (rows == cols) r.det = (rank == rows) ? sign * prev : 0;
  return r;
}

}  // namespace

int exact_rank(Int128Matrix m) { return bareiss(std::move(m)).rank; }

int128 exact_determinant(Int128Matrix m) {
  if (m.empty() || m.size() != m[0].size())
    throw Error("exact_determinant: matrix must be square");
  return bareiss(std::move(m)).det;
}

int128 cofactor_determinant(const Int128Matrix& m) {
  std::size_t n = m.size();
  if (n == 0 || m[0].size() != n) throw Error("cofactor_determinant: matrix must be square");
  if (n == 1) return m[0][0];
  int128 det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Int128Matrix minor(n - 1, std::vector<int128>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor[i - 1][jj++] = m[i][j];
      }
    }
    int128 term = m[0][c] * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

std::vector<int128> solve_exact(Int128Matrix m, std::vector<int128> b) {
  std::size_t n = m.size();
  if (n == 0 || m[0].size() != n || b.size() != n)
    throw Error("solve_exact: need a square system");
  // Augment and eliminate fraction-free, then back-substitute exactly.
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  auto r = bareiss(std::move(m));
  if (r.rank != (int)n) throw InternalInconsistency("solve_exact: singular system");
  for (std::size_t i = 0; i < n; ++i)
    if (r.pivot_cols[i] != (int)i)
      throw InternalInconsistency("solve_exact: singular system (pivot escaped)");
  std::vector<int128> x(n);
  for (int i = (int)n - 1; i >= 0; --i) {
    int128 rhs = r.m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) rhs -= r.m[i][j] * x[j];
    if (r.m[i][i] == 0 || rhs % r.m[i][i] != 0)
      throw InternalInconsistency("solve_exact: non-integer solution");
    x[i] = rhs / r.m[i][i];
  }
  return x;
}

}  // namespace census
