// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// JSON-configured end-to-end runs: parse + validate a datum, build the
// quantization, execute the verification checks, and emit deterministic
// report/side files.

#include "syzq/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "syzq/errors.hpp"

namespace syzq::pipeline {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using report::format_double;
using report::VerificationReport;

int get_int(const json& o, const char* key, int dflt) {
  if (!o.contains(key)) return dflt;
  const auto& v = o.at(key);
  if (!v.is_number_integer())
    fail(errc::invalid_input, std::string(key) + " must be an integer");
  return v.get<int>();
}

double get_num(const json& o, const char* key, double dflt) {
  if (!o.contains(key)) return dflt;
  const auto& v = o.at(key);
  if (!v.is_number())
    fail(errc::invalid_input, std::string(key) + " must be a number");
  return v.get<double>();
}

std::uint64_t get_u64(const json& o, const char* key, std::uint64_t dflt) {
  if (!o.contains(key)) return dflt;
  const auto& v = o.at(key);
  if (!v.is_number_integer() ||
      (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    fail(errc::invalid_input,
         std::string(key) + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

bool get_bool(const json& o, const char* key, bool dflt) {
  if (!o.contains(key)) return dflt;
  const auto& v = o.at(key);
  if (!v.is_boolean())
    fail(errc::invalid_input, std::string(key) + " must be a boolean");
  return v.get<bool>();
}

std::int64_t integral_entry(const json& v, const char* what) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) <= 9.0e15)
      return static_cast<std::int64_t>(d);
    fail(errc::not_integral, std::string(what) + " entries must be integers");
  }
  fail(errc::not_integral, std::string(what) + " entries must be integers");
}

MatXd parse_real_matrix(const json& v, const char* what) {
  if (!v.is_array() || v.empty())
    fail(errc::invalid_input, std::string(what) + " must be a matrix");
  const int rows = static_cast<int>(v.size());
  int cols = -1;
  for (const auto& row : v) {
    if (!row.is_array())
      fail(errc::invalid_input, std::string(what) + " must be a matrix");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols || cols == 0)
      fail(errc::invalid_input, std::string(what) + " rows must have equal length");
  }
  MatXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const auto& e = v.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
      if (!e.is_number())
        fail(errc::invalid_input, std::string(what) + " entries must be numbers");
      m(i, j) = e.get<double>();
    }
  return m;
}

MatI parse_integer_matrix(const json& v, const char* what) {
  if (!v.is_array() || v.empty())
    fail(errc::invalid_input, std::string(what) + " must be a matrix");
  const int rows = static_cast<int>(v.size());
  int cols = -1;
  for (const auto& row : v) {
    if (!row.is_array())
      fail(errc::invalid_input, std::string(what) + " must be a matrix");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols || cols == 0)
      fail(errc::invalid_input, std::string(what) + " rows must have equal length");
  }
  MatI m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = integral_entry(
          v.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)), what);
  return m;
}

VecI parse_integer_vector(const json& v, const char* what) {
  if (!v.is_array() || v.empty())
    fail(errc::invalid_input, std::string(what) + " must be a nonempty array");
  VecI out(static_cast<int>(v.size()));
  for (int i = 0; i < out.size(); ++i)
    out(i) = integral_entry(v.at(static_cast<size_t>(i)), what);
  return out;
}

std::vector<std::int64_t> parse_weight_key(const std::string& key) {
  const auto bad = [&]() {
    fail(errc::invalid_coefficient,
         "weight key '" + key + "' is not of the form (a,b,...)");
  };
  if (key.size() < 3 || key.front() != '(' || key.back() != ')') bad();
  std::vector<std::int64_t> out;
  size_t pos = 1;
  while (pos < key.size() - 1) {
    size_t used = 0;
    std::int64_t val = 0;
    try {
      val = std::stoll(key.substr(pos, key.size() - 1 - pos), &used);
    } catch (const std::exception&) {
      bad();
    }
    out.push_back(val);
    pos += used;
    if (pos == key.size() - 1) break;
    if (key[pos] != ',') bad();
    ++pos;
  }
  if (out.empty()) bad();
  return out;
}

// ---------------------------------------------------------------------------
// Mode runners
// ---------------------------------------------------------------------------

void run_abelian(const RunConfig& config, VerificationReport& rep,
                 const std::string& out_dir) {
  const abelian::Datum& d = *config.abelian_datum;
  const NumericsConfig& cfg = config.numerics;
  const double hbar = cfg.hbar;

  const abelian::RiemannResiduals rr = abelian::riemann_residuals(d);
  rep.add("riemann_commute_residual", rr.r_commute, 1e-10);
  rep.add("riemann_positivity_min", rr.pd_min, 0.0, rr.pd_min > 0.0);

  const auto points = abelian::intersection_points(d);
  rep.add("distinguished_point_defect",
          std::abs(static_cast<double>(points.size()) -
                   static_cast<double>(d.detQ)),
          0.0);

  // The residual gates are evaluated here as checks (so an over-tight
  // tolerance surfaces as a failed check, not as an aborted run).
  NumericsConfig relaxed = cfg;
  relaxed.residual_tol = 1e300;

  std::vector<abelian::Theta> thetas;
  double dbar_max = 0.0, bound_max = 0.0;
  for (const auto& pt : points) {
    thetas.push_back(abelian::theta_function(d, pt, hbar, relaxed));
    dbar_max = std::max(dbar_max, thetas.back().dbar.residual);
    bound_max = std::max(bound_max, thetas.back().truncation_bound);
  }
  rep.add("dbar_residual_max", dbar_max, cfg.residual_tol);
  rep.add("truncation_bound_max", bound_max, cfg.residual_tol);

  double mod_max = 0.0, phase_max = 0.0;
  bool automorphy_ok = true;
  for (const auto& th : thetas) {
    for (int j = 0; j < d.n; ++j) {
      try {
        const abelian::AutomorphyReport ar =
            abelian::automorphy_check(d, th, j, cfg);
        mod_max = std::max(mod_max, ar.max_modulus_error);
        phase_max = std::max(phase_max, ar.max_phase_error);
      } catch (const error&) {
        automorphy_ok = false;
        mod_max = std::max(mod_max, 1.0);
      }
    }
  }
  rep.add("automorphy_modulus_max", mod_max, 1e-8,
          automorphy_ok && mod_max <= 1e-8);
  rep.add("automorphy_phase_max", phase_max, 1e-8,
          automorphy_ok && phase_max <= 1e-8);

  const abelian::SpanReport span = abelian::span_report(d, hbar, relaxed);
  rep.add("span_rank_defect",
          std::abs(static_cast<double>(span.expected - span.rank)), 0.0);
  rep.add("span_sigma_min", span.sigma_min, 1e-6, span.sigma_min > 1e-6);

  const int cgrid = d.n <= 2 ? 128 : 32;
  const double conc =
      abelian::concentration_fraction(d, points.front(), hbar, 0.25, cgrid);
  rep.add("concentration_fraction", conc, 1.0, conc > 0.0 && conc <= 1.0);

  rep.summary.expected_dim = d.detQ;
  rep.summary.num_points = static_cast<std::int64_t>(points.size());
  rep.summary.rank = span.rank;
  rep.summary.dbar_residual = dbar_max;

  if (out_dir.empty()) return;

  if (config.emit.lattice_points) {
    std::ofstream f(fs::path(out_dir) / "points.csv");
    for (int i = 0; i < d.n; ++i) f << "x" << (i + 1) << ",";
    f << "index\n";
    for (size_t i = 0; i < points.size(); ++i) {
      for (int j = 0; j < d.n; ++j) f << points[i][static_cast<size_t>(j)].str() << ",";
      f << i << "\n";
    }
  }
  if (config.emit.sections) {
    std::ofstream f(fs::path(out_dir) / "sections.csv");
    f << "section,";
    for (int i = 0; i < d.n; ++i) f << "x" << (i + 1) << ",";
    for (int i = 0; i < d.n; ++i) f << "y" << (i + 1) << ",";
    f << "re,im\n";
    SplitMix64 rng(cfg.seed);
    for (size_t i = 0; i < thetas.size(); ++i) {
      for (int s = 0; s < 4; ++s) {
        VecXd x(d.n), y(d.n);
        for (int j = 0; j < d.n; ++j) x(j) = rng.uniform();
        for (int j = 0; j < d.n; ++j) y(j) = rng.uniform();
        const cplx v = thetas[i].eval(d.Omega, x, y);
        f << i << ",";
        for (int j = 0; j < d.n; ++j) f << format_double(x(j)) << ",";
        for (int j = 0; j < d.n; ++j) f << format_double(y(j)) << ",";
        f << format_double(v.real()) << "," << format_double(v.imag()) << "\n";
      }
    }
  }
  if (config.emit.theta_grid && d.n <= 2) {
    std::ofstream f(fs::path(out_dir) / "theta.csv");
    for (int i = 0; i < d.n; ++i) f << "x" << (i + 1) << ",";
    f << "abs\n";
    const int G = 32;
    const VecXd y0 = VecXd::Zero(d.n);
    std::vector<int> idx(static_cast<size_t>(d.n), 0);
    while (true) {
      VecXd x(d.n);
      for (int i = 0; i < d.n; ++i)
        x(i) = static_cast<double>(idx[static_cast<size_t>(i)]) / G;
      const double a = std::abs(thetas.front().eval(d.Omega, x, y0));
      for (int i = 0; i < d.n; ++i) f << format_double(x(i)) << ",";
      f << format_double(a) << "\n";
      int i = d.n - 1;
      for (; i >= 0; --i) {
        if (++idx[static_cast<size_t>(i)] < G) break;
        idx[static_cast<size_t>(i)] = 0;
      }
      if (i < 0) break;
    }
  }
}

void run_toric(const RunConfig& config, VerificationReport& rep,
               const std::string& out_dir) {
  const toric::Datum& d = *config.toric_datum;
  const NumericsConfig& cfg = config.numerics;
  const int N = static_cast<int>(d.points.size());

  // Character property and holomorphy of every basis section.
  const core::WittenContext ctx = toric::context(d);
  double char_max = 0.0, dbar_max = 0.0;
  for (const auto& p : d.points) {
    const core::ResidualReport cm = toric::character_match(d, p.x, cfg);
    char_max = std::max(char_max, cm.residual);
    core::ForwardResult fwd =
        core::forward_transform(toric::basis_function(d, p.x), cfg);
    const core::ResidualReport db = core::dbar_residual(fwd.section, ctx, cfg);
    dbar_max = std::max(dbar_max, db.residual);
  }
  rep.add("character_residual_max", char_max, cfg.residual_tol);
  rep.add("dbar_residual_max", dbar_max, cfg.residual_tol);

  // Boundary degenerations.
  double mom_max = 0.0;
  bool mom_ok = true;
  for (int j = 0; j < d.polytope.facet_count(); ++j) {
    const toric::MomentLimitReport ml = toric::moment_limit_check(d, j);
    mom_max = std::max(mom_max, ml.residual);
    mom_ok = mom_ok && ml.pass;
  }
  rep.add("moment_limit_residual_max", mom_max, 1e-3,
          mom_ok && mom_max <= 1e-3);

  const toric::PrequantumReport pq = toric::prequantum_residual(d, cfg);
  rep.add("prequantum_residual", pq.residual, 1e-5);
  rep.add("prequantum_order", pq.order, 1.9, pq.order >= 1.9);

  // Fibers: every interior lattice point must yield an interior fiber.
  const std::vector<toric::Fiber> fibers = toric::bs_fibers(d, cfg);
  int expected_interior = 0;
  for (const auto& p : d.points)
    if (p.interior) ++expected_interior;
  int got_interior = 0;
  for (const auto& f : fibers)
    if (f.interior) ++got_interior;
  rep.add("fiber_count_defect",
          std::abs(static_cast<double>(fibers.size()) - N), 0.0);
  rep.add("interior_fiber_defect",
          std::abs(static_cast<double>(got_interior - expected_interior)),
          0.0);

  // Growth classification sweep over the bounding box inflated by one unit.
  {
    std::vector<std::int64_t> lo(static_cast<size_t>(d.n)), hi(static_cast<size_t>(d.n));
    for (int i = 0; i < d.n; ++i) {
      rat mn = d.polytope.vertices.front()[static_cast<size_t>(i)];
      rat mx = mn;
      for (const auto& v : d.polytope.vertices) {
        if (v[static_cast<size_t>(i)] < mn) mn = v[static_cast<size_t>(i)];
        if (mx < v[static_cast<size_t>(i)]) mx = v[static_cast<size_t>(i)];
      }
      lo[static_cast<size_t>(i)] = mn.floor() - 1;
      hi[static_cast<size_t>(i)] = mx.ceil() + 1;
    }
    int misclassified = 0;
    VecI m(d.n);
    for (int i = 0; i < d.n; ++i) m(i) = lo[static_cast<size_t>(i)];
    while (true) {
      if (!toric::extendability_test(d, m).consistent) ++misclassified;
      int i = d.n - 1;
      for (; i >= 0; --i) {
        if (++m(i) <= hi[static_cast<size_t>(i)]) break;
        m(i) = lo[static_cast<size_t>(i)];
      }
      if (i < 0) break;
    }
    rep.add("extendability_misclassified", misclassified, 0.0);
  }

  const toric::ConditionStarReport cs =
      toric::condition_star_report(d, d.lambda, cfg);
  rep.add("condition_star_error",
          std::max(cs.worst_grad_error, cs.worst_hess_error), 1e-8);
  rep.add("condition_star_mixed", cs.worst_mixed, 1e-6);

  const toric::SpanReport span = toric::span_report(d, cfg);
  rep.add("span_rank_defect",
          std::abs(static_cast<double>(span.expected - span.rank)), 0.0);
  rep.add("span_sigma_min", span.sigma_min, 1e-6, span.sigma_min > 1e-6);

  rep.summary.expected_dim = N;
  rep.summary.num_points = N;
  rep.summary.rank = span.rank;
  rep.summary.dbar_residual = dbar_max;

  if (out_dir.empty()) return;

  if (config.emit.lattice_points) {
    std::ofstream f(fs::path(out_dir) / "lattice.csv");
    for (int i = 0; i < d.n; ++i) f << "x" << (i + 1) << ",";
    f << "location\n";
    for (const auto& p : d.points) {
      for (int i = 0; i < d.n; ++i) f << p.x(i) << ",";
      f << (p.interior ? "interior" : "boundary") << "\n";
    }
  }
  if (config.emit.fibers) {
    ordered_json arr = ordered_json::array();
    for (const auto& fib : fibers) {
      ordered_json e;
      e["u"] = std::vector<std::int64_t>(fib.u.data(), fib.u.data() + fib.u.size());
      e["location"] = fib.interior ? "interior" : "boundary";
      if (fib.interior) {
        std::vector<double> xi(fib.xi.data(), fib.xi.data() + fib.xi.size());
        e["xi"] = xi;
      } else {
        std::vector<double> w(fib.witness.data(),
                              fib.witness.data() + fib.witness.size());
        e["witness"] = w;
        e["triviality"] = std::vector<std::int64_t>(
            fib.triviality.data(), fib.triviality.data() + fib.triviality.size());
      }
      arr.push_back(std::move(e));
    }
    std::ofstream f(fs::path(out_dir) / "bs_fibers.json");
    f << arr.dump(2) << "\n";
  }
  if (config.emit.sections) {
    std::ofstream f(fs::path(out_dir) / "sections.csv");
    f << "section,";
    for (int i = 0; i < d.n; ++i) f << "xi" << (i + 1) << ",";
    for (int i = 0; i < d.n; ++i) f << "y" << (i + 1) << ",";
    f << "re,im\n";
    SplitMix64 rng(cfg.seed);
    for (int i = 0; i < N; ++i) {
      const VecXd u = d.points[static_cast<size_t>(i)].x.cast<double>();
      for (int s = 0; s < 4; ++s) {
        VecXd xi(d.n), y(d.n);
        for (int j = 0; j < d.n; ++j) xi(j) = rng.uniform(-0.5, 0.5);
        for (int j = 0; j < d.n; ++j) y(j) = rng.uniform();
        const double phi = toric::potential_jet(d, xi).phi;
        const cplx v = std::exp(-2.0 * kPi * (phi - u.dot(xi))) *
                       std::polar(1.0, -2.0 * kPi * u.dot(y));
        f << i << ",";
        for (int j = 0; j < d.n; ++j) f << format_double(xi(j)) << ",";
        for (int j = 0; j < d.n; ++j) f << format_double(y(j)) << ",";
        f << format_double(v.real()) << "," << format_double(v.imag()) << "\n";
      }
    }
  }
}

void run_demo(const RunConfig& config, VerificationReport& rep) {
  const NumericsConfig& cfg = config.numerics;
  const double hbar = cfg.hbar;
  if (std::max(std::abs(config.demo_k_min), std::abs(config.demo_k_max)) >
      cfg.truncation)
    fail(errc::invalid_input,
         "demo degree range exceeds the mode truncation window");

  MatXd Omega(1, 1);
  Omega << 1.0;
  MatI Q(1, 1);
  Q << 1;
  const abelian::Datum d = abelian::validate_datum(Omega, Q);
  const std::vector<rat> origin = {rat(0)};
  NumericsConfig relaxed = cfg;
  relaxed.residual_tol = 1e300;  // gate evaluated as a check below
  const abelian::Theta theta =
      abelian::theta_function(d, origin, hbar, relaxed);

  rep.add("dbar_residual", theta.dbar.residual, cfg.residual_tol);

  // Coefficient k of the section must be the Gaussian monomial weight:
  // α_k(x) · e^{πx²/ħ} · e^{2πkx/ħ} · e^{πk²/ħ} ≡ 1 for every base point x.
  const std::vector<double> xs = {0.1, 0.35, 0.6, 0.85};
  for (int k = config.demo_k_min; k <= config.demo_k_max; ++k) {
    core::VecXi mode(1);
    mode << k;
    double dev = 0.0;
    for (const double x : xs) {
      VecXd xi(1);
      xi << x;  // ξ = Ωx with Ω = 1
      const cplx alpha = theta.section.coeff(mode, xi);
      const double fac =
          std::exp(kPi / hbar * (x * x + 2.0 * k * x + double(k) * k));
      dev = std::max(dev, std::abs(alpha * fac - 1.0));
    }
    rep.add("monomial_degree_k=" + std::to_string(k), dev, 1e-10);
  }

  rep.summary.expected_dim = 1;
  rep.summary.num_points = 1;
  rep.summary.rank = 1;
  rep.summary.dbar_residual = theta.dbar.residual;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception&) {
    fail(errc::invalid_input, "configuration is not valid JSON");
  }
  if (!doc.is_object())
    fail(errc::invalid_input, "configuration must be a JSON object");
  if (!doc.contains("mode") || !doc.at("mode").is_string())
    fail(errc::invalid_input, "configuration needs a string 'mode'");

  RunConfig rc;
  rc.mode = doc.at("mode").get<std::string>();
  rc.config_hash = report::fnv1a64(doc.dump());

  if (doc.contains("numerics")) {
    const json& num = doc.at("numerics");
    if (!num.is_object())
      fail(errc::invalid_input, "'numerics' must be an object");
    rc.numerics.truncation = get_int(num, "truncation", rc.numerics.truncation);
    rc.numerics.grid = get_int(num, "grid", rc.numerics.grid);
    rc.numerics.fd_step = get_num(num, "fd_step", rc.numerics.fd_step);
    rc.numerics.hbar = get_num(num, "hbar", rc.numerics.hbar);
    rc.numerics.newton_tol = get_num(num, "newton_tol", rc.numerics.newton_tol);
    rc.numerics.residual_tol =
        get_num(num, "residual_tol", rc.numerics.residual_tol);
    rc.numerics.seed = get_u64(num, "seed", rc.numerics.seed);
    rc.numerics.threads = get_int(num, "threads", rc.numerics.threads);
  }
  rc.numerics.validate();

  if (doc.contains("emit")) {
    const json& em = doc.at("emit");
    if (!em.is_object()) fail(errc::invalid_input, "'emit' must be an object");
    rc.emit.lattice_points = get_bool(em, "lattice_points", rc.emit.lattice_points);
    rc.emit.sections = get_bool(em, "sections", rc.emit.sections);
    rc.emit.theta_grid = get_bool(em, "theta_grid", rc.emit.theta_grid);
    rc.emit.fibers = get_bool(em, "fibers", rc.emit.fibers);
  }

  static const json kEmpty = json::object();
  const json* datum = &kEmpty;
  if (doc.contains("datum")) {
    if (!doc.at("datum").is_object())
      fail(errc::invalid_input, "'datum' must be an object");
    datum = &doc.at("datum");
  }
  const json& dat = *datum;

  if (rc.mode == "abelian") {
    if (!dat.contains("Omega") || !dat.contains("Q"))
      fail(errc::invalid_input,
           "abelian mode needs 'Omega' and 'Q' matrices in 'datum'");
    const MatXd Omega = parse_real_matrix(dat.at("Omega"), "Omega");
    const MatI Q = parse_integer_matrix(dat.at("Q"), "Q");
    rc.abelian_datum = abelian::validate_datum(Omega, Q);
  } else if (rc.mode == "toric") {
    for (const char* key : {"n", "generators", "max_cones", "lambda"})
      if (!dat.contains(key))
        fail(errc::invalid_input,
             std::string("toric mode needs '") + key + "' in 'datum'");
    const int n = get_int(dat, "n", 0);
    if (!dat.at("generators").is_array() || !dat.at("max_cones").is_array())
      fail(errc::invalid_input, "'generators' and 'max_cones' must be arrays");
    std::vector<VecI> gens;
    for (const auto& g : dat.at("generators"))
      gens.push_back(parse_integer_vector(g, "generators"));
    std::vector<std::vector<int>> cones;
    for (const auto& c : dat.at("max_cones")) {
      if (!c.is_array())
        fail(errc::invalid_input, "'max_cones' entries must be arrays");
      std::vector<int> cone;
      for (const auto& e : c)
        cone.push_back(static_cast<int>(integral_entry(e, "max_cones")));
      cones.push_back(std::move(cone));
    }
    const lattice::Fan fan = lattice::validate_fan(n, gens, cones);
    const VecI lambda = parse_integer_vector(dat.at("lambda"), "lambda");
    std::map<std::vector<std::int64_t>, double> weights;
    if (dat.contains("c")) {
      const json& c = dat.at("c");
      if (!c.is_object()) fail(errc::invalid_input, "'c' must be an object");
      for (const auto& [key, val] : c.items()) {
        if (!val.is_number())
          fail(errc::invalid_coefficient, "weights must be numbers");
        weights[parse_weight_key(key)] = val.get<double>();
      }
    }
    rc.toric_datum = toric::make_datum(fan, lambda, weights);
  } else if (rc.mode == "demo") {
    rc.demo_k_min = get_int(dat, "k_min", rc.demo_k_min);
    rc.demo_k_max = get_int(dat, "k_max", rc.demo_k_max);
    if (rc.demo_k_min > rc.demo_k_max ||
        rc.demo_k_max - rc.demo_k_min > 64)
      fail(errc::invalid_input, "demo degree range is empty or too large");
  } else {
    fail(errc::invalid_input, "mode must be 'abelian', 'toric', or 'demo'");
  }
  return rc;
}

report::VerificationReport run(const RunConfig& config,
                               const std::string& out_dir) {
  config.numerics.validate();
  if (!out_dir.empty()) fs::create_directories(out_dir);
  VerificationReport rep;
  rep.mode = config.mode;
  rep.config_hash = config.config_hash;
  rep.numerics = config.numerics;

  if (config.mode == "abelian") {
    if (!config.abelian_datum)
      fail(errc::invalid_input, "abelian mode without a datum");
    run_abelian(config, rep, out_dir);
  } else if (config.mode == "toric") {
    if (!config.toric_datum)
      fail(errc::invalid_input, "toric mode without a datum");
    run_toric(config, rep, out_dir);
  } else if (config.mode == "demo") {
    run_demo(config, rep);
  } else {
    fail(errc::invalid_input, "unknown mode '" + config.mode + "'");
  }

  bool all = true;
  for (const auto& c : rep.checks) all = all && c.pass;
  rep.summary.pass = all;

  if (!out_dir.empty()) {
    std::ofstream f(fs::path(out_dir) / "report.json");
    f << rep.to_json();
  }
  return rep;
}

}  // namespace syzq::pipeline
