#pragma once

#include <vector>

#include "rat.hpp"

namespace pdo {

// Basis of {x : A x = 0} over Q by exact row reduction.
inline std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> A, long ncols) {
  std::vector<long> pivot_col;
  long row = 0;
  for (long col = 0; col < ncols && row < static_cast<long>(A.size()); ++col) {
    long piv = -1;
    for (long r = row; r < static_cast<long>(A.size()); ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[row], A[piv]);
    Rat inv = Rat(1) / A[row][col];
    for (long c = col; c < ncols; ++c) A[row][c] *= inv;
    for (long r = 0; r < static_cast<long>(A.size()); ++r) {
      if (r == row || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (long c = col; c < ncols; ++c) A[r][c] -= f * A[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (long c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (long free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -A[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pdo
