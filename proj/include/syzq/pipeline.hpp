// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// End-to-end runs driven by a JSON configuration: validate the datum, build
// the quantization, run the verification checks, and emit a report plus
// optional CSV/JSON side files into an output directory.

#ifndef SYZQ_PIPELINE_HPP
#define SYZQ_PIPELINE_HPP

#include <optional>
#include <string>

#include "syzq/abelian.hpp"
#include "syzq/report.hpp"
#include "syzq/toric.hpp"

namespace syzq::pipeline {

/// What side files to write next to report.json.
struct EmitConfig {
  bool lattice_points = true;  ///< lattice.csv (toric) / points.csv (abelian)
  bool sections = true;        ///< sections.csv sample table
  bool theta_grid = false;     ///< theta.csv |θ| over a base grid (abelian)
  bool fibers = true;          ///< bs_fibers.json (toric)
};

/// Parsed run configuration.  Exactly one datum is set, per `mode`.
struct RunConfig {
  std::string mode;  ///< "abelian" | "toric" | "demo"
  std::optional<abelian::Datum> abelian_datum;
  std::optional<toric::Datum> toric_datum;
  int demo_k_min = -2;  ///< demo mode: mode/monomial degree range
  int demo_k_max = 3;
  NumericsConfig numerics;
  EmitConfig emit;
  std::uint64_t config_hash = 0;  ///< FNV-1a 64 of the canonical config text
};

/// Parses and validates a configuration JSON document (see README for the
/// schema).  Throws InvalidInput on malformed documents and the specific
/// validation error on bad data.
RunConfig parse_run_config(const std::string& json_text);

/// Runs the configured mode; writes report.json (+ side files) into out_dir
/// when non-empty.  Returns the report.
report::VerificationReport run(const RunConfig& config,
                               const std::string& out_dir);

}  // namespace syzq::pipeline

#endif  // SYZQ_PIPELINE_HPP
