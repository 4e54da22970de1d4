// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Shared test helpers.

#ifndef SYZQ_TESTS_HELPERS_HPP
#define SYZQ_TESTS_HELPERS_HPP

#include <utility>

#include <Eigen/Core>

#include "syzq/errors.hpp"

namespace syzq::testing {

/// Runs f and returns the error code it throws (errc::ok if it doesn't).
template <typename F>
syzq::errc code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const syzq::error& e) {
    return e.code();
  }
  return syzq::errc::ok;
}

/// Entrywise equality for integer Eigen matrices/vectors.
template <typename A, typename B>
bool ieq(const A& a, const B& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace syzq::testing

#endif  // SYZQ_TESTS_HELPERS_HPP
