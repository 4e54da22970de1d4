// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Quantization of smooth projective toric manifolds: dual potential, basis
// characters, fiber classification, boundary degeneration checks, and the
// mirror superpotential.

#include "syzq/toric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <memory>

#include "syzq/errors.hpp"

namespace syzq::toric {
namespace {

std::vector<std::int64_t> key_of(const VecI& u) {
  std::vector<std::int64_t> k(static_cast<size_t>(u.size()));
  for (int i = 0; i < u.size(); ++i) k[static_cast<size_t>(i)] = u(i);
  return k;
}

bool veci_eq(const VecI& a, const VecI& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

/// Softmax weights of the potential's exponential sum at ξ, with the largest
/// exponent factored out (stable arbitrarily deep into the boundary limits).
std::vector<double> softmax_weights(const Datum& d, const VecXd& xi) {
  const size_t N = d.points.size();
  std::vector<double> e(N);
  double mx = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < N; ++i) {
    const VecI& u = d.points[i].x;
    double dot = 0.0;
    for (int k = 0; k < d.n; ++k) dot += static_cast<double>(u(k)) * xi(k);
    e[i] = 4.0 * kPi * dot + std::log(d.c.at(key_of(u)));
    mx = std::max(mx, e[i]);
  }
  double z = 0.0;
  for (size_t i = 0; i < N; ++i) {
    e[i] = std::exp(e[i] - mx);
    z += e[i];
  }
  for (size_t i = 0; i < N; ++i) e[i] /= z;
  return e;
}

int find_point(const Datum& d, const VecI& u) {
  for (size_t i = 0; i < d.points.size(); ++i)
    if (veci_eq(d.points[i].x, u)) return static_cast<int>(i);
  return -1;
}

std::vector<VecXd> grid_nd(int n, const std::vector<double>& coords) {
  std::vector<VecXd> out;
  std::vector<int> idx(static_cast<size_t>(n), 0);
  const int k = static_cast<int>(coords.size());
  while (true) {
    VecXd x(n);
    for (int i = 0; i < n; ++i)
      x(i) = coords[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    out.push_back(x);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++idx[static_cast<size_t>(i)] < k) break;
      idx[static_cast<size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

cplx ipow(const cplx& z, std::int64_t e) {
  if (e == 0) return cplx(1.0, 0.0);
  cplx base = e > 0 ? z : cplx(1.0, 0.0) / z;
  std::int64_t k = std::llabs(e);
  cplx acc(1.0, 0.0);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace

double Datum::weight(const VecI& u) const {
  const auto it = c.find(key_of(u));
  if (it == c.end())
    fail(errc::not_a_lattice_point, "no weight: not a lattice point of B");
  return it->second;
}

Datum make_datum(const Fan& fan, const VecI& lambda,
                 const std::map<std::vector<std::int64_t>, double>& c) {
  Datum d;
  d.fan = fan;
  d.lambda = lambda;
  d.n = fan.n;
  d.polytope = lattice::polytope_from_fan(fan, lambda);
  d.points = lattice::enumerate_lattice_points(d.polytope);
  if (d.points.empty())
    fail(errc::invalid_input, "moment polytope has no lattice points");

  for (const auto& p : d.points) d.c[key_of(p.x)] = 1.0;
  for (const auto& [key, w] : c) {
    if (static_cast<int>(key.size()) != d.n)
      fail(errc::invalid_coefficient, "weight key has wrong dimension");
    if (!std::isfinite(w) || w <= 0.0)
      fail(errc::invalid_coefficient, "weights must be finite and positive");
    const auto it = d.c.find(key);
    if (it == d.c.end())
      fail(errc::invalid_coefficient,
           "weight key is not a lattice point of the moment polytope");
    it->second = w;
  }
  return d;
}

Jet potential_jet(const Datum& d, const VecXd& xi) {
  const int n = d.n;
  Jet jet;
  jet.weights = softmax_weights(d, xi);

  // phi needs the log-partition value itself, not just the weights.
  double mx = -std::numeric_limits<double>::infinity();
  std::vector<double> e(d.points.size());
  for (size_t i = 0; i < d.points.size(); ++i) {
    const VecI& u = d.points[i].x;
    double dot = 0.0;
    for (int k = 0; k < n; ++k) dot += static_cast<double>(u(k)) * xi(k);
    e[i] = 4.0 * kPi * dot + std::log(d.c.at(key_of(u)));
    mx = std::max(mx, e[i]);
  }
  double z = 0.0;
  for (size_t i = 0; i < d.points.size(); ++i) z += std::exp(e[i] - mx);
  jet.phi = (mx + std::log(z)) / (4.0 * kPi);

  jet.grad = VecXd::Zero(n);
  MatXd m2 = MatXd::Zero(n, n);
  for (size_t i = 0; i < d.points.size(); ++i) {
    const VecXd u = d.points[i].x.cast<double>();
    jet.grad += jet.weights[i] * u;
    m2 += jet.weights[i] * u * u.transpose();
  }
  jet.hess = 4.0 * kPi * (m2 - jet.grad * jet.grad.transpose());
  return jet;
}

double facet_moment(const Datum& d, int facet, const VecXd& xi) {
  if (facet < 0 || facet >= d.polytope.facet_count())
    fail(errc::invalid_input, "facet index out of range");
  const std::vector<double> w = softmax_weights(d, xi);
  double acc = 0.0;
  for (size_t i = 0; i < d.points.size(); ++i)
    acc += w[i] * static_cast<double>(d.polytope.eval_facet(facet, d.points[i].x));
  return acc;
}

MomentLimitReport moment_limit_check(const Datum& d, int facet, double tol) {
  if (facet < 0 || facet >= d.polytope.facet_count())
    fail(errc::invalid_input, "facet index out of range");
  const VecXd v = d.fan.generators[static_cast<size_t>(facet)].cast<double>();

  MomentLimitReport rep;
  rep.facet = facet;
  for (const double t : {-1.0, -2.0, -3.0})
    rep.values.push_back(facet_moment(d, facet, t * v));
  rep.residual = rep.values.back();
  // The moment is a nonnegative mixture of the facet values, so equality
  // (all zero) occurs exactly in fully degenerate directions; non-strict
  // monotonicity covers both regimes.
  rep.decreasing = rep.values[0] >= rep.values[1] &&
                   rep.values[1] >= rep.values[2] && rep.values[2] >= 0.0;
  bool finite = true;
  for (const double x : rep.values)
    if (!std::isfinite(x)) finite = false;
  rep.pass = finite && rep.decreasing && rep.residual <= tol;
  return rep;
}

PrequantumReport prequantum_residual(const Datum& d, const NumericsConfig& cfg) {
  cfg.validate();
  const int n = d.n;
  const std::vector<VecXd> samples = grid_nd(n, {-0.32, 0.0, 0.32});

  const auto residual_at = [&](double h) {
    double worst = 0.0;
    for (const VecXd& xi : samples) {
      const Jet jet = potential_jet(d, xi);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          const double fd = fd_d1(
              [&](double t) {
                VecXd x2 = xi;
                x2(a) += t;
                return potential_jet(d, x2).grad(b);
              },
              h);
          worst = std::max(worst, std::abs(fd - jet.hess(a, b)));
        }
      }
    }
    return worst;
  };

  PrequantumReport rep;
  rep.h = cfg.fd_step;
  rep.residual = residual_at(cfg.fd_step);
  const double r1 = residual_at(1e-2);
  const double r2 = residual_at(5e-3);
  if (r1 == 0.0 && r2 == 0.0) {
    // Constant jets (single-point degenerations) make the stencil exact at
    // both steps; the measured order saturates at the stencil's design order.
    rep.order = 4.0;
  } else {
    rep.order = (r1 > 0.0 && r2 > 0.0) ? std::log2(r1 / r2) : 0.0;
  }
  rep.pass = rep.residual <= 1e-5 && rep.order >= 1.9;
  return rep;
}

std::vector<Fiber> bs_fibers(const Datum& d, const NumericsConfig& cfg) {
  cfg.validate();
  const int n = d.n;
  std::vector<Fiber> out;

  for (const auto& p : d.points) {
    Fiber fib;
    fib.u = p.x;
    fib.interior = p.interior;

    if (p.interior) {
      // Damped Newton on the strictly convex F(ξ) = φ(ξ) − <u, ξ>.
      const VecXd u = p.x.cast<double>();
      VecXd xi = VecXd::Zero(n);
      bool converged = false;
      for (int it = 0; it < 100; ++it) {
        const Jet jet = potential_jet(d, xi);
        const VecXd g = jet.grad - u;
        if (g.cwiseAbs().maxCoeff() <= cfg.newton_tol) {
          converged = true;
          break;
        }
        const VecXd step = jet.hess.llt().solve(-g);
        const double f0 = jet.phi - u.dot(xi);
        const double slope = g.dot(step);
        double t = 1.0;
        for (int ls = 0; ls < 60; ++ls) {
          const VecXd cand = xi + t * step;
          const double fc = potential_jet(d, cand).phi - u.dot(cand);
          if (fc <= f0 + 1e-4 * t * slope) break;
          t *= 0.5;
        }
        xi += t * step;
      }
      if (!converged)
        fail(errc::newton_diverged,
             "fiber location did not converge for an interior lattice point");
      fib.xi = xi;
    } else {
      std::vector<int> active;
      for (int k = 0; k < d.polytope.facet_count(); ++k)
        if (d.polytope.eval_facet(k, p.x) == 0) active.push_back(k);
      VecXd w = VecXd::Zero(n);
      for (const int k : active)
        w += d.fan.generators[static_cast<size_t>(k)].cast<double>();
      fib.witness = w;

      // Lex-least vertex whose active facet set contains the point's.
      int vtx = -1;
      for (int v = 0; v < d.polytope.vertex_count() && vtx < 0; ++v) {
        const auto& va = d.polytope.vertex_active[static_cast<size_t>(v)];
        bool contains_all = true;
        for (const int k : active) {
          if (std::find(va.begin(), va.end(), k) == va.end()) {
            contains_all = false;
            break;
          }
        }
        if (contains_all) vtx = v;
      }
      if (vtx < 0)
        fail(errc::internal, "boundary point has no containing vertex cone");
      // Chart rows at the witness vertex: its active set when simple, else
      // the first maximal cone inside the (degenerate) active set — both are
      // unimodular row systems vanishing at the vertex.
      const auto& va = d.polytope.vertex_active[static_cast<size_t>(vtx)];
      std::vector<int> rows;
      if (static_cast<int>(va.size()) == n) {
        rows = lattice::vertex_chart(d.polytope, vtx).facets;
      } else {
        for (const auto& cone : d.fan.max_cones) {
          if (std::includes(va.begin(), va.end(), cone.begin(), cone.end())) {
            rows = cone;
            break;
          }
        }
        if (rows.empty())
          fail(errc::internal, "no maximal cone inside a vertex active set");
      }
      fib.triviality.resize(n);
      for (int i = 0; i < n; ++i)
        fib.triviality(i) =
            d.polytope.eval_facet(rows[static_cast<size_t>(i)], p.x);
    }
    out.push_back(std::move(fib));
  }
  return out;
}

PathSpaceFunction basis_function(const Datum& d, const VecI& u) {
  if (find_point(d, u) < 0)
    fail(errc::not_a_lattice_point,
         "basis functions are indexed by lattice points of B");
  const int n = d.n;
  const auto pd = std::make_shared<const Datum>(d);
  const VecXd ud = u.cast<double>();

  VecXi mode(n);
  for (int i = 0; i < n; ++i) mode(i) = static_cast<int>(-u(i));

  PathSpaceFunction f;
  f.n = n;
  f.support = {mode};
  f.working_box = Box::cube(n, -0.5, 0.5);
  f.value = [pd, ud, mode](const VecXd& xi, const VecXi& m) -> cplx {
    if (m.size() != mode.size()) return cplx(0.0, 0.0);
    for (int i = 0; i < m.size(); ++i)
      if (m(i) != mode(i)) return cplx(0.0, 0.0);
    const Jet jet = potential_jet(*pd, xi);
    return cplx(std::exp(-2.0 * kPi * (jet.phi - ud.dot(xi))), 0.0);
  };
  f.grad = [pd, ud, mode, n](const VecXd& xi, const VecXi& m) -> VecXcd {
    VecXcd g = VecXcd::Zero(n);
    if (m.size() != mode.size()) return g;
    for (int i = 0; i < m.size(); ++i)
      if (m(i) != mode(i)) return g;
    const Jet jet = potential_jet(*pd, xi);
    const double v = std::exp(-2.0 * kPi * (jet.phi - ud.dot(xi)));
    for (int k = 0; k < n; ++k)
      g(k) = cplx(2.0 * kPi * (ud(k) - jet.grad(k)) * v, 0.0);
    return g;
  };
  return f;
}

ResidualReport character_match(const Datum& d, const VecI& u,
                               const NumericsConfig& cfg) {
  cfg.validate();
  const int n = d.n;
  const PathSpaceFunction f = basis_function(d, u);
  const ForwardResult fwd = forward_transform(f, cfg);
  const VecXd ud = u.cast<double>();

  const std::vector<VecXd> xis = grid_nd(n, {-0.3, 0.0, 0.3});
  const std::vector<VecXd> ys = grid_nd(n, {0.2, 0.6, 0.9});

  double worst = 0.0;
  for (const VecXd& xi : xis) {
    const double phi = potential_jet(d, xi).phi;
    for (const VecXd& y : ys) {
      // e^{−2πφ} · e^{−2πi <u, z>} with z = y̌ + iξ.
      const cplx expected = std::exp(-2.0 * kPi * (phi - ud.dot(xi))) *
                            std::polar(1.0, -2.0 * kPi * ud.dot(y));
      worst = std::max(worst, std::abs(fwd.section.eval(xi, y) - expected));
    }
  }

  ResidualReport rep;
  rep.residual = worst;
  rep.h = cfg.fd_step;
  rep.truncation = cfg.truncation;
  rep.grid = cfg.grid;
  rep.tolerance = cfg.residual_tol;
  rep.pass = worst <= cfg.residual_tol;
  return rep;
}

ExtendabilityReport extendability_test(const Datum& d, const VecI& m) {
  if (m.size() != d.n)
    fail(errc::invalid_input, "probe point has wrong dimension");
  ExtendabilityReport rep;
  rep.m = m;
  rep.in_polytope = d.polytope.contains(m);

  const VecXd md = m.cast<double>();
  const double phi0 = potential_jet(d, VecXd::Zero(d.n)).phi;
  double ratio = 0.0;
  for (int k = 0; k < d.polytope.facet_count(); ++k) {
    const VecXd xi = -3.0 * d.fan.generators[static_cast<size_t>(k)].cast<double>();
    const double phi = potential_jet(d, xi).phi;
    // f_m(ξ)/f_m(0) = exp(−2π(φ(ξ) − <m,ξ> − φ(0)))
    ratio = std::max(ratio, std::exp(-2.0 * kPi * (phi - md.dot(xi) - phi0)));
  }
  rep.growth_ratio = ratio;
  rep.classified_bounded = ratio <= 10.0;
  rep.consistent = rep.classified_bounded == rep.in_polytope;
  return rep;
}

ConditionStarReport condition_star_report(const Datum& d, const VecI& a,
                                          const NumericsConfig& cfg) {
  cfg.validate();
  if (a.size() != d.fan.ray_count())
    fail(errc::invalid_input, "offset vector length does not match ray count");

  ConditionStarReport rep;
  rep.a = a;

  for (int j = 0; j < d.polytope.facet_count(); ++j) {
    // Level masses C_p = Σ_{l_j(u) = p} c_u of the facet filtration.
    double c0 = 0.0, c1 = 0.0;
    for (const auto& p : d.points) {
      const std::int64_t lev = d.polytope.eval_facet(j, p.x);
      if (lev == 0) c0 += d.c.at(key_of(p.x));
      if (lev == 1) c1 += d.c.at(key_of(p.x));
    }
    if (c0 <= 0.0)
      fail(errc::internal, "facet carries no lattice points at level 0");
    const double target = 2.0 * c1 / c0;
    const double shift = static_cast<double>(a(j) - d.lambda(j));
    const VecXd v = d.fan.generators[static_cast<size_t>(j)].cast<double>();

    for (const double t : {-3.0}) {
      const VecXd xi = t * v;
      const double scale = std::exp(-4.0 * kPi * t);

      const double qg = 2.0 * scale * (facet_moment(d, j, xi) + shift);
      rep.worst_grad_error = std::max(
          rep.worst_grad_error,
          std::abs(qg - target) / std::max(1.0, std::abs(target)));

      // Hessian projection via facet-value moments: Hess(v_j,v_j) =
      // 4π·Var(l_j), computed from non-negative summands so the deep limit
      // does not cancel catastrophically.
      const std::vector<double> w = softmax_weights(d, xi);
      double el = 0.0, el2 = 0.0;
      for (size_t i = 0; i < d.points.size(); ++i) {
        const double lv =
            static_cast<double>(d.polytope.eval_facet(j, d.points[i].x));
        el += w[i] * lv;
        el2 += w[i] * lv * lv;
      }
      const double var = el2 - el * el;
      const double qh = 2.0 * scale * var;  // e^{−4πt}·Hess(v,v)/(2π)
      rep.worst_hess_error = std::max(
          rep.worst_hess_error,
          std::abs(qh - target) / std::max(1.0, std::abs(target)));
    }
  }

  // Transverse cross terms: facet pairs sharing a maximal cone, probed at
  // t_j = −3, t_k = 0 with the matching scale e^{−2π(t_j + t_k)}.
  for (const auto& cone : d.fan.max_cones) {
    for (size_t ja = 0; ja < cone.size(); ++ja) {
      for (size_t ka = 0; ka < cone.size(); ++ka) {
        if (ja == ka) continue;
        const int j = cone[ja];
        const int k = cone[ka];
        const VecXd xi = -3.0 * d.fan.generators[static_cast<size_t>(j)].cast<double>();
        const std::vector<double> w = softmax_weights(d, xi);
        double elj = 0.0, elk = 0.0, eljk = 0.0;
        for (size_t i = 0; i < d.points.size(); ++i) {
          const double lj =
              static_cast<double>(d.polytope.eval_facet(j, d.points[i].x));
          const double lk =
              static_cast<double>(d.polytope.eval_facet(k, d.points[i].x));
          elj += w[i] * lj;
          elk += w[i] * lk;
          eljk += w[i] * lj * lk;
        }
        // Hess(v_j, v_k)/(4π) = Cov(l_j, l_k); scale e^{−2π(−3+0)} = e^{6π}.
        const double mixed =
            std::exp(6.0 * kPi) * 4.0 * kPi * std::abs(eljk - elj * elk);
        rep.worst_mixed = std::max(rep.worst_mixed, mixed);
      }
    }
  }

  rep.pass = rep.worst_grad_error <= 1e-8 && rep.worst_hess_error <= 1e-8 &&
             rep.worst_mixed <= 1e-6;
  return rep;
}

cplx superpotential(const Datum& d, const VecXcd& z) {
  if (z.size() != d.n)
    fail(errc::invalid_input, "mirror coordinate has wrong dimension");
  for (int i = 0; i < d.n; ++i)
    if (std::abs(z(i)) == 0.0)
      fail(errc::invalid_input, "mirror coordinates must be nonzero");

  cplx acc(0.0, 0.0);
  for (int j = 0; j < d.fan.ray_count(); ++j) {
    cplx term = std::exp(-static_cast<double>(d.lambda(j)));
    for (int i = 0; i < d.n; ++i)
      term *= ipow(z(i), d.fan.generators[static_cast<size_t>(j)](i));
    if (!(std::abs(term) < 1.0))
      fail(errc::outside_mirror_domain,
           "superpotential term " + std::to_string(j) +
               " has modulus at least 1");
    acc += term;
  }
  return acc;
}

SpanReport span_report(const Datum& d, const NumericsConfig& cfg) {
  cfg.validate();
  const int N = static_cast<int>(d.points.size());
  const int n = d.n;

  SpanReport rep;
  rep.expected = N;

  SplitMix64 rng(cfg.seed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::MatrixXcd M(N, N);
    for (int col = 0; col < N; ++col) {
      VecXd xi(n), y(n);
      for (int i = 0; i < n; ++i) xi(i) = rng.uniform(-0.6, 0.6);
      for (int i = 0; i < n; ++i) y(i) = rng.uniform();
      const double phi = potential_jet(d, xi).phi;
      for (int row = 0; row < N; ++row) {
        const VecXd u = d.points[static_cast<size_t>(row)].x.cast<double>();
        M(row, col) = std::exp(-2.0 * kPi * (phi - u.dot(xi))) *
                      std::polar(1.0, -2.0 * kPi * u.dot(y));
      }
    }
    for (int i = 0; i < N; ++i) {
      const double s = M.row(i).cwiseAbs().maxCoeff();
      if (s > 0.0) M.row(i) /= s;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& sig = svd.singularValues();
    const double smin = sig(N - 1);
    if (smin > rep.sigma_min) {
      rep.sigma_min = smin;
      rep.rank = 0;
      for (int i = 0; i < N; ++i)
        if (sig(i) > 1e-6) ++rep.rank;
    }
    if (rep.sigma_min > 1e-3) break;
  }
  rep.pass = rep.rank == static_cast<int>(rep.expected) && rep.sigma_min > 1e-6;
  return rep;
}

WittenContext context(const Datum& d) {
  const auto pd = std::make_shared<const Datum>(d);
  WittenContext ctx;
  ctx.n = d.n;
  ctx.hbar = 1.0;
  ctx.zeta = [pd](const VecXd& xi) -> VecXd { return potential_jet(*pd, xi).grad; };
  return ctx;
}

}  // namespace syzq::toric
