// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Smith normal form over the integers.
//
// Given an integer matrix A (r×c), computes unimodular U (r×r) and V (c×c)
// with U·A·V = D diagonal, d_1 | d_2 | ... , d_i ≥ 0.  Used for
//   * canonical representatives of ℤ^d modulo an integer column image
//     (divisor class groups), and
//   * enumerating the finite group ℤⁿ/Qℤⁿ (counting |det Q| cosets).
// Matrices here are tiny (≤ 8×4), so a textbook pivoting reduction with
// 64-bit entries is exact and instant.

#ifndef SYZQ_SMITH_HPP
#define SYZQ_SMITH_HPP

#include <Eigen/Core>
#include <cstdint>

namespace syzq {

using MatI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct SmithDecomposition {
  MatI U;  ///< unimodular row transform (r×r)
  MatI V;  ///< unimodular column transform (c×c)
  MatI D;  ///< U*A*V, diagonal with d_1 | d_2 | ..., entries ≥ 0
  int rank = 0;
};

SmithDecomposition smith_normal_form(const MatI& A);

/// Determinant of a small integer matrix, computed exactly (fraction-free
/// Bareiss elimination).  Requires a square input.
std::int64_t integer_determinant(const MatI& A);

}  // namespace syzq

#endif  // SYZQ_SMITH_HPP
