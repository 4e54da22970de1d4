// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Machine-readable verification reports.  Key order is fixed (ordered JSON)
// and all floating-point values are serialized via a locale-independent
// shortest-roundtrip formatter, so identical runs produce identical bytes.

#ifndef SYZQ_REPORT_HPP
#define SYZQ_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "syzq/numerics.hpp"

namespace syzq::report {

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Summary {
  bool pass = false;
  std::int64_t expected_dim = 0;
  std::int64_t num_points = 0;
  int rank = 0;
  double dbar_residual = 0.0;
};

struct VerificationReport {
  std::string mode;            ///< "abelian" | "toric" | "demo"
  std::uint64_t config_hash = 0;  ///< FNV-1a 64 of the canonical config JSON
  NumericsConfig numerics;
  std::vector<Check> checks;
  Summary summary;

  void add(const std::string& name, double value, double tolerance, bool pass);
  void add(const std::string& name, double value, double tolerance);

  /// Deterministic JSON (2-space indent, '\n' line ends, fixed key order).
  std::string to_json() const;
};

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(const std::string& bytes);

/// Shortest-roundtrip decimal form of a double ("0.25", "1e-06", ...).
std::string format_double(double x);

}  // namespace syzq::report

#endif  // SYZQ_REPORT_HPP
