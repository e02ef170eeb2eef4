#include "borbit/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace borbit::linalg {

namespace {

// Row echelon with partial bookkeeping; returns pivot column per row.
std::vector<int> echelon(RatMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rat inv = Rat(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMat a) { return static_cast<int>(echelon(a).size()); }

std::optional<RatVec> solve(RatMat a, RatVec b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  RatMat aug = a;
  std::vector<int> pivots = echelon(aug);
  RatVec x(cols, Rat(0));
  int r = 0;
  for (int c : pivots) {
    if (c == cols) return std::nullopt;  // pivot in the constant column
    x[c] = aug[r][cols];
    ++r;
  }
  // rows past the pivot rows must be identically zero
  for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
    if (!aug[i][cols].is_zero()) return std::nullopt;
  return x;
}

std::vector<RatVec> nullspace(RatMat a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  RatMat e = a;
  std::vector<int> pivots = echelon(e);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -e[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool lattice_contains(std::vector<std::vector<long long>> gens,
                      std::vector<long long> v) {
  const int n = static_cast<int>(v.size());
  bool nonzero = false;
  for (long long c : v) nonzero |= (c != 0);
  if (!nonzero) return true;
  if (gens.empty()) return false;

  auto mulsub = [](std::vector<long long>& a, const std::vector<long long>& b,
                   long long q) {
    for (size_t i = 0; i < a.size(); ++i) {
      __int128 t = static_cast<__int128>(a[i]) - static_cast<__int128>(q) * b[i];
      if (t > INT64_MAX || t < INT64_MIN)
        throw std::overflow_error("lattice reduction overflow");
      a[i] = static_cast<long long>(t);
    }
  };

  // Column Hermite reduction: sweep rows top-down, leaving at most one
  // active column with a nonzero entry in the current row; that column is
  // frozen as the row's pivot.
  std::vector<int> pivot_col(n, -1);
  int active = 0;  // columns [active, end) still in play
  const int m = static_cast<int>(gens.size());
  for (int row = 0; row < n && active < m; ++row) {
    while (true) {
      int j1 = -1, j2 = -1;
      for (int j = active; j < m; ++j) {
        if (gens[j][row] == 0) continue;
        if (j1 < 0) j1 = j;
        else { j2 = j; break; }
      }
      if (j2 < 0) {  // zero or one nonzero in this row among active columns
        if (j1 >= 0) {
          std::swap(gens[j1], gens[active]);
          pivot_col[row] = active;
          ++active;
        }
        break;
      }
      // Euclid step on the pair with entries in this row.
      if (std::llabs(gens[j1][row]) < std::llabs(gens[j2][row])) std::swap(j1, j2);
      long long q = gens[j1][row] / gens[j2][row];
      mulsub(gens[j1], gens[j2], q);
    }
  }

  // Back substitution against the frozen triangular columns.
  for (int row = 0; row < n; ++row) {
    if (pivot_col[row] >= 0) {
      long long p = gens[pivot_col[row]][row];
      if (v[row] % p != 0) return false;
      mulsub(v, gens[pivot_col[row]], v[row] / p);
    } else if (v[row] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace borbit::linalg
