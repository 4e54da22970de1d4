// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Deterministic verification reports: fixed key order, shortest-roundtrip
// number formatting, stable hashing.

#include "syzq/report.hpp"

#include <charconv>
#include <cstdio>

#include "json.hpp"

namespace syzq::report {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char b : bytes) {
    h ^= static_cast<std::uint64_t>(b);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void VerificationReport::add(const std::string& name, double value,
                             double tolerance, bool pass_flag) {
  checks.push_back(Check{name, value, tolerance, pass_flag});
}

void VerificationReport::add(const std::string& name, double value,
                             double tolerance) {
  add(name, value, tolerance, value <= tolerance);
}

std::string VerificationReport::to_json() const {
  using ordered_json = nlohmann::ordered_json;

  char hash_buf[32];
  std::snprintf(hash_buf, sizeof(hash_buf), "0x%016llx",
                static_cast<unsigned long long>(config_hash));

  ordered_json j;
  j["tool"] = "syzq";
  j["version"] = "0.1.0";
  j["mode"] = mode;

  ordered_json num;
  num["truncation"] = numerics.truncation;
  num["grid"] = numerics.grid;
  num["fd_step"] = numerics.fd_step;
  num["hbar"] = numerics.hbar;
  num["newton_tol"] = numerics.newton_tol;
  num["residual_tol"] = numerics.residual_tol;
  num["seed"] = numerics.seed;
  num["threads"] = numerics.threads;

  ordered_json inputs;
  inputs["config_hash"] = std::string(hash_buf);
  inputs["numerics"] = std::move(num);
  j["inputs"] = std::move(inputs);

  ordered_json arr = ordered_json::array();
  for (const Check& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["value"] = c.value;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);

  ordered_json s;
  s["pass"] = summary.pass;
  s["expected_dim"] = summary.expected_dim;
  s["num_points"] = summary.num_points;
  s["rank"] = summary.rank;
  s["dbar_residual"] = summary.dbar_residual;
  j["summary"] = std::move(s);

  return j.dump(2) + "\n";
}

}  // namespace syzq::report
