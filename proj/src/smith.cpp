// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Smith normal form and exact determinants for small integer matrices.

#include "syzq/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "syzq/errors.hpp"

namespace syzq {

SmithDecomposition smith_normal_form(const MatI& A) {
  const int r = static_cast<int>(A.rows());
  const int c = static_cast<int>(A.cols());
  SmithDecomposition s;
  s.U = MatI::Identity(r, r);
  s.V = MatI::Identity(c, c);
  s.D = A;
  MatI& D = s.D;

  const int k = std::min(r, c);
  for (int t = 0; t < k; ++t) {
    // Bring the absolutely smallest nonzero entry of the trailing block to
    // the pivot position: Euclid steps then shrink it fastest.
    int pi = -1, pj = -1;
    std::int64_t best = 0;
    for (int i = t; i < r; ++i) {
      for (int j = t; j < c; ++j) {
        const std::int64_t v = std::abs(D(i, j));
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) {
      D.row(t).swap(D.row(pi));
      s.U.row(t).swap(s.U.row(pi));
    }
    if (pj != t) {
      D.col(t).swap(D.col(pj));
      s.V.col(t).swap(s.V.col(pj));
    }

    // Clear row and column t.  Each pass either zeroes an entry or strictly
    // shrinks |D(t,t)|, so this terminates.
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        const std::int64_t q = D(i, t) / D(t, t);
        if (q != 0) {
          D.row(i) -= q * D.row(t);
          s.U.row(i) -= q * s.U.row(t);
        }
        if (D(i, t) != 0) {  // remainder became the smaller pivot
          D.row(t).swap(D.row(i));
          s.U.row(t).swap(s.U.row(i));
          again = true;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        const std::int64_t q = D(t, j) / D(t, t);
        if (q != 0) {
          D.col(j) -= q * D.col(t);
          s.V.col(j) -= q * s.V.col(t);
        }
        if (D(t, j) != 0) {
          D.col(t).swap(D.col(j));
          s.V.col(t).swap(s.V.col(j));
          again = true;
        }
      }
    }

    // Divisibility: the pivot must divide the whole trailing block.  If it
    // doesn't, fold the offending row in and redo this pivot (the pivot gcd
    // strictly decreases, so this terminates too).
    bool fixed = false;
    for (int i = t + 1; i < r && !fixed; ++i) {
      for (int j = t + 1; j < c && !fixed; ++j) {
        if (D(i, j) % D(t, t) != 0) {
          D.row(t) += D.row(i);
          s.U.row(t) += s.U.row(i);
          fixed = true;
        }
      }
    }
    if (fixed) {
      --t;
      continue;
    }
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      s.U.row(t) = -s.U.row(t);
    }
  }

  s.rank = 0;
  for (int i = 0; i < k; ++i)
    if (D(i, i) != 0) ++s.rank;
  return s;
}

std::int64_t integer_determinant(const MatI& A) {
  if (A.rows() != A.cols())
    fail(errc::invalid_input, "determinant of a non-square matrix");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return 1;

  // Fraction-free Bareiss elimination with 128-bit intermediates.
  std::vector<__int128> m(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * n + j] = A(i, j);
  auto at = [&](int i, int j) -> __int128& {
    return m[static_cast<size_t>(i) * n + j];
  };

  __int128 prev = 1;
  int sign = 1;
  for (int t = 0; t + 1 < n; ++t) {
    if (at(t, t) == 0) {
      int swap_row = -1;
      for (int i = t + 1; i < n; ++i) {
        if (at(i, t) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(t, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i) {
      for (int j = t + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(t, t) - at(i, t) * at(t, j)) / prev;
      at(i, t) = 0;
    }
    prev = at(t, t);
  }
  const __int128 det = at(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN)
    fail(errc::internal, "determinant overflows 64 bits");
  return sign * static_cast<std::int64_t>(det);
}

}  // namespace syzq
