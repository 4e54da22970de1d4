// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Command-line front-end.  Reads a JSON configuration, applies flag
// overrides, and drives the pipeline exclusively through the C API of the
// shared library, exactly like an external consumer would.
//
// Exit codes: 0 all checks passed, 1 a verification check failed,
// 2 invalid input/configuration, 3 internal or numerical failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "syzq.h"

namespace {

struct Options {
  std::string config_path;
  std::string out_dir;
  int truncation = 0;
  int grid = 0;
  double fd_step = 0.0;
  double hbar = 0.0;
  std::uint64_t seed = 0;
  int parallel = 0;
};

/// Reads the whole file; returns false on I/O failure.
bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

/// Builds the run configuration JSON: file contents (if any), the subcommand
/// as mode, and numeric overrides for flags the user actually passed.
int build_config(const std::string& mode, const Options& opt,
                 const CLI::App& sub, std::string& out) {
  nlohmann::json doc = nlohmann::json::object();
  if (!opt.config_path.empty()) {
    std::string text;
    if (!read_file(opt.config_path, text)) {
      std::cerr << "error: cannot read config file '" << opt.config_path
                << "'\n";
      return 2;
    }
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: config file is not valid JSON: " << e.what()
                << "\n";
      return 2;
    }
    if (!doc.is_object()) {
      std::cerr << "error: config file must hold a JSON object\n";
      return 2;
    }
  }
  doc["mode"] = mode;
  if (!doc.contains("numerics")) doc["numerics"] = nlohmann::json::object();
  if (sub.count("--truncation") > 0) doc["numerics"]["truncation"] = opt.truncation;
  if (sub.count("--grid") > 0) doc["numerics"]["grid"] = opt.grid;
  if (sub.count("--fd-step") > 0) doc["numerics"]["fd_step"] = opt.fd_step;
  if (sub.count("--hbar") > 0) doc["numerics"]["hbar"] = opt.hbar;
  if (sub.count("--seed") > 0) doc["numerics"]["seed"] = opt.seed;
  if (sub.count("--parallel") > 0) doc["numerics"]["threads"] = opt.parallel;
  out = doc.dump();
  return 0;
}

int run_mode(const std::string& mode, const Options& opt,
             const CLI::App& sub) {
  std::string config;
  if (const int rc = build_config(mode, opt, sub, config); rc != 0) return rc;

  std::unique_ptr<syzq_run, decltype(&syzq_run_destroy)> run(
      syzq_run_create(config.c_str()), &syzq_run_destroy);
  if (!run) {
    std::cerr << "error: " << syzq_last_error() << "\n";
    return 2;
  }
  const char* dir = opt.out_dir.empty() ? nullptr : opt.out_dir.c_str();
  const syzq_status st = syzq_run_execute(run.get(), dir);
  if (st == SYZQ_OK || st == SYZQ_CHECK_FAILED) {
    const char* rep = syzq_run_report_json(run.get());
    if (rep != nullptr) std::cout << rep;
  } else {
    std::cerr << "error: " << syzq_last_error() << "\n";
  }
  return static_cast<int>(st);
}

void add_common_flags(CLI::App* sub, Options& opt, bool config_required) {
  auto* c = sub->add_option("--config", opt.config_path,
                            "JSON configuration file");
  if (config_required) c->required();
  sub->add_option("--out", opt.out_dir,
                  "output directory for report.json and data files");
  sub->add_option("--truncation", opt.truncation,
                  "mode window radius R (|m|_inf <= R)");
  sub->add_option("--grid", opt.grid, "fiber grid points per dimension");
  sub->add_option("--fd-step", opt.fd_step, "finite-difference step");
  sub->add_option("--hbar", opt.hbar, "semiclassical parameter");
  sub->add_option("--seed", opt.seed, "RNG seed for sampled checks");
  sub->add_option("--parallel", opt.parallel,
                  "worker threads (0 = hardware default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "syzq — polarized-section spaces via SYZ transforms: builds the "
      "distinguished sections of an abelian or toric datum, verifies "
      "holomorphy/automorphy/spanning, and emits a JSON report."};
  app.require_subcommand(1);

  Options opt;
  CLI::App* abelian =
      app.add_subcommand("abelian", "polarized abelian variety pipeline");
  CLI::App* toric =
      app.add_subcommand("toric", "projective toric manifold pipeline");
  CLI::App* demo =
      app.add_subcommand("demo", "1D monomial-matching demonstration");
  add_common_flags(abelian, opt, /*config_required=*/true);
  add_common_flags(toric, opt, /*config_required=*/true);
  add_common_flags(demo, opt, /*config_required=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (abelian->parsed()) return run_mode("abelian", opt, *abelian);
  if (toric->parsed()) return run_mode("toric", opt, *toric);
  return run_mode("demo", opt, *demo);
}
