// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// C API shim: opaque handles over the C++ core, exception-free boundaries,
// thread-local error text, and errc → status code mapping.

#include "syzq.h"

#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "syzq/abelian.hpp"
#include "syzq/errors.hpp"
#include "syzq/pipeline.hpp"
#include "syzq/toric.hpp"

namespace {

using syzq::errc;

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }
void clear_error() { g_last_error.clear(); }

syzq_status status_of(errc code) {
  switch (code) {
    case errc::invalid_input:
    case errc::invalid_numerics:
    case errc::unbounded:
    case errc::non_smooth_vertex:
    case errc::degenerate_vertex:
    case errc::not_symmetric:
    case errc::not_positive_definite:
    case errc::not_integral:
    case errc::do_not_commute:
    case errc::not_a_lattice_point:
    case errc::outside_mirror_domain:
    case errc::invalid_coefficient:
      return SYZQ_INVALID_INPUT;
    default:
      return SYZQ_ERROR;
  }
}

/// Runs fn() inside a catch-all boundary; returns the mapped status.
template <typename Fn>
syzq_status guarded(Fn&& fn) {
  try {
    clear_error();
    return fn();
  } catch (const syzq::error& e) {
    set_error(e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    set_error(e.what());
    return SYZQ_ERROR;
  } catch (...) {
    set_error("unknown error");
    return SYZQ_ERROR;
  }
}

/// Parses a datum-only JSON object and wraps it as a full run configuration
/// with the given mode, reusing the pipeline's schema validation.
syzq::pipeline::RunConfig datum_config(const char* datum_json,
                                       const char* mode) {
  if (datum_json == nullptr)
    syzq::fail(errc::invalid_input, "datum JSON is NULL");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(datum_json);
  } catch (const nlohmann::json::exception&) {
    syzq::fail(errc::invalid_input, "datum is not valid JSON");
  }
  if (!doc.is_object())
    syzq::fail(errc::invalid_input, "datum must be a JSON object");
  nlohmann::json wrapped;
  wrapped["mode"] = mode;
  wrapped["datum"] = std::move(doc);
  return syzq::pipeline::parse_run_config(wrapped.dump());
}

}  // namespace

struct syzq_run {
  syzq::pipeline::RunConfig config;
  std::string report_json;
  bool executed = false;
  bool passed = false;
};

struct syzq_abelian {
  syzq::abelian::Datum datum;
  std::vector<std::vector<syzq::rat>> points;
  // Theta sections are cached per (point index, hbar bit pattern).
  std::map<std::pair<int, std::uint64_t>, syzq::abelian::Theta> cache;
};

struct syzq_toric {
  syzq::toric::Datum datum;
};

extern "C" {

const char* syzq_version(void) { return "0.1.0"; }

const char* syzq_last_error(void) { return g_last_error.c_str(); }

/* ---- whole-pipeline runs ------------------------------------------------ */

syzq_run* syzq_run_create(const char* config_json) {
  syzq_run* handle = nullptr;
  guarded([&]() -> syzq_status {
    if (config_json == nullptr)
      syzq::fail(errc::invalid_input, "configuration JSON is NULL");
    auto owned = std::make_unique<syzq_run>();
    owned->config = syzq::pipeline::parse_run_config(config_json);
    handle = owned.release();
    return SYZQ_OK;
  });
  return handle;
}

syzq_status syzq_run_execute(syzq_run* run, const char* out_dir) {
  return guarded([&]() -> syzq_status {
    if (run == nullptr)
      syzq::fail(errc::invalid_input, "run handle is NULL");
    const std::string dir = out_dir == nullptr ? std::string() : out_dir;
    const syzq::report::VerificationReport rep =
        syzq::pipeline::run(run->config, dir);
    run->report_json = rep.to_json();
    run->executed = true;
    run->passed = rep.summary.pass;
    return run->passed ? SYZQ_OK : SYZQ_CHECK_FAILED;
  });
}

const char* syzq_run_report_json(const syzq_run* run) {
  if (run == nullptr || !run->executed) return nullptr;
  return run->report_json.c_str();
}

int syzq_run_passed(const syzq_run* run) {
  return (run != nullptr && run->executed && run->passed) ? 1 : 0;
}

void syzq_run_destroy(syzq_run* run) { delete run; }

/* ---- fine-grained handles ----------------------------------------------- */

syzq_abelian* syzq_abelian_create(const char* datum_json) {
  syzq_abelian* handle = nullptr;
  guarded([&]() -> syzq_status {
    const syzq::pipeline::RunConfig rc = datum_config(datum_json, "abelian");
    auto owned = std::make_unique<syzq_abelian>();
    owned->datum = *rc.abelian_datum;
    owned->points = syzq::abelian::intersection_points(owned->datum);
    handle = owned.release();
    return SYZQ_OK;
  });
  return handle;
}

void syzq_abelian_destroy(syzq_abelian* a) { delete a; }

syzq_status syzq_abelian_num_points(const syzq_abelian* a, int64_t* out) {
  return guarded([&]() -> syzq_status {
    if (a == nullptr || out == nullptr)
      syzq::fail(errc::invalid_input, "NULL handle or output pointer");
    *out = static_cast<int64_t>(a->points.size());
    return SYZQ_OK;
  });
}

syzq_status syzq_abelian_theta(syzq_abelian* a, int index, double hbar,
                               const double* x, const double* y, size_t n,
                               double* out_re, double* out_im) {
  return guarded([&]() -> syzq_status {
    if (a == nullptr || x == nullptr || y == nullptr || out_re == nullptr ||
        out_im == nullptr)
      syzq::fail(errc::invalid_input, "NULL handle or pointer argument");
    if (index < 0 || static_cast<size_t>(index) >= a->points.size())
      syzq::fail(errc::invalid_input, "point index out of range");
    if (static_cast<int>(n) != a->datum.n)
      syzq::fail(errc::invalid_input, "coordinate length does not match n");
    if (!(hbar > 0.0))
      syzq::fail(errc::invalid_numerics, "hbar must be positive");

    std::uint64_t bits = 0;
    static_assert(sizeof(bits) == sizeof(hbar));
    std::memcpy(&bits, &hbar, sizeof(bits));
    const auto key = std::make_pair(index, bits);
    auto it = a->cache.find(key);
    if (it == a->cache.end()) {
      syzq::NumericsConfig cfg;
      cfg.hbar = hbar;
      it = a->cache
               .emplace(key, syzq::abelian::theta_function(
                                 a->datum, a->points[static_cast<size_t>(index)],
                                 hbar, cfg))
               .first;
    }
    syzq::VecXd vx(a->datum.n), vy(a->datum.n);
    for (int i = 0; i < a->datum.n; ++i) {
      vx(i) = x[static_cast<size_t>(i)];
      vy(i) = y[static_cast<size_t>(i)];
    }
    const syzq::cplx v = it->second.eval(a->datum.Omega, vx, vy);
    *out_re = v.real();
    *out_im = v.imag();
    return SYZQ_OK;
  });
}

syzq_toric* syzq_toric_create(const char* datum_json) {
  syzq_toric* handle = nullptr;
  guarded([&]() -> syzq_status {
    const syzq::pipeline::RunConfig rc = datum_config(datum_json, "toric");
    auto owned = std::make_unique<syzq_toric>();
    owned->datum = *rc.toric_datum;
    handle = owned.release();
    return SYZQ_OK;
  });
  return handle;
}

void syzq_toric_destroy(syzq_toric* t) { delete t; }

syzq_status syzq_toric_num_points(const syzq_toric* t, int64_t* out) {
  return guarded([&]() -> syzq_status {
    if (t == nullptr || out == nullptr)
      syzq::fail(errc::invalid_input, "NULL handle or output pointer");
    *out = static_cast<int64_t>(t->datum.points.size());
    return SYZQ_OK;
  });
}

syzq_status syzq_toric_potential(const syzq_toric* t, const double* xi,
                                 size_t n, double* out_phi, double* out_grad) {
  return guarded([&]() -> syzq_status {
    if (t == nullptr || xi == nullptr || out_phi == nullptr)
      syzq::fail(errc::invalid_input, "NULL handle or pointer argument");
    if (static_cast<int>(n) != t->datum.n)
      syzq::fail(errc::invalid_input, "coordinate length does not match n");
    syzq::VecXd v(t->datum.n);
    for (int i = 0; i < t->datum.n; ++i) v(i) = xi[static_cast<size_t>(i)];
    const syzq::toric::Jet jet =
        syzq::toric::potential_jet(t->datum, v);
    *out_phi = jet.phi;
    if (out_grad != nullptr)
      for (int i = 0; i < t->datum.n; ++i)
        out_grad[static_cast<size_t>(i)] = jet.grad(i);
    return SYZQ_OK;
  });
}

syzq_status syzq_toric_superpotential(const syzq_toric* t, const double* z_re,
                                      const double* z_im, size_t n,
                                      double* out_re, double* out_im) {
  return guarded([&]() -> syzq_status {
    if (t == nullptr || z_re == nullptr || z_im == nullptr ||
        out_re == nullptr || out_im == nullptr)
      syzq::fail(errc::invalid_input, "NULL handle or pointer argument");
    if (static_cast<int>(n) != t->datum.n)
      syzq::fail(errc::invalid_input, "coordinate length does not match n");
    syzq::VecXcd z(t->datum.n);
    for (int i = 0; i < t->datum.n; ++i)
      z(i) = syzq::cplx(z_re[static_cast<size_t>(i)],
                        z_im[static_cast<size_t>(i)]);
    const syzq::cplx w = syzq::toric::superpotential(t->datum, z);
    *out_re = w.real();
    *out_im = w.imag();
    return SYZQ_OK;
  });
}

} /* extern "C" */
