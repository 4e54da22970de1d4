// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Quantization of polarized abelian fibrations: distinguished points, the
// Gaussian mode families attached to them, their theta-type transforms, and
// the verification reports (holomorphy, quasi-periodicity, concentration,
// span).

#include "syzq/abelian.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "syzq/errors.hpp"

namespace syzq::abelian {
namespace {

using RatVec = std::vector<rat>;
using RatMat = std::vector<std::vector<rat>>;

bool rat_lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

/// Exact inverse of an integer matrix by Gauss–Jordan over ℚ.
RatMat rat_inverse(const MatI& A) {
  const int n = static_cast<int>(A.rows());
  RatMat m(static_cast<size_t>(n), RatVec(static_cast<size_t>(2 * n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = rat(A(i, j));
    m[i][static_cast<size_t>(n + i)] = rat(1);
  }
  for (int t = 0; t < n; ++t) {
    int pivot = -1;
    for (int i = t; i < n; ++i) {
      if (!m[i][t].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) fail(errc::internal, "singular matrix in exact inverse");
    std::swap(m[t], m[pivot]);
    const rat inv_p = rat(1) / m[t][t];
    for (int j = 0; j < 2 * n; ++j) m[t][j] = m[t][j] * inv_p;
    for (int i = 0; i < n; ++i) {
      if (i == t || m[i][t].is_zero()) continue;
      const rat f = m[i][t];
      for (int j = 0; j < 2 * n; ++j) m[i][j] = m[i][j] - f * m[t][j];
    }
  }
  RatMat inv(static_cast<size_t>(n), RatVec(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][static_cast<size_t>(n + j)];
  return inv;
}

VecXd rat_to_vecxd(const RatVec& v) {
  VecXd out(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<int>(i)) = v[i].to_double();
  return out;
}

std::vector<VecXd> fraction_cube(int n, const std::vector<double>& fr) {
  std::vector<VecXd> out;
  std::vector<int> idx(static_cast<size_t>(n), 0);
  const int k = static_cast<int>(fr.size());
  while (true) {
    VecXd x(n);
    for (int i = 0; i < n; ++i) x(i) = fr[static_cast<size_t>(idx[static_cast<size_t>(i)])];
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

}  // namespace

Datum validate_datum(const MatXd& Omega, const MatI& Q, double commute_tol) {
  const int n = static_cast<int>(Omega.rows());
  if (n < 1 || Omega.cols() != n)
    fail(errc::invalid_input, "period matrix must be square and nonempty");
  if (Q.rows() != n || Q.cols() != n)
    fail(errc::invalid_input, "polarization matrix size does not match");

  if ((Omega - Omega.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    fail(errc::not_symmetric, "period matrix is not symmetric");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (Q(i, j) != Q(j, i))
        fail(errc::not_symmetric, "polarization matrix is not symmetric");

  const MatXd Qd = Q.cast<double>();
  {
    Eigen::SelfAdjointEigenSolver<MatXd> es(Omega);
    if (es.eigenvalues().minCoeff() <= 0.0)
      fail(errc::not_positive_definite, "period matrix is not positive definite");
  }
  {
    Eigen::SelfAdjointEigenSolver<MatXd> es(Qd);
    if (es.eigenvalues().minCoeff() <= 0.0)
      fail(errc::not_positive_definite,
           "polarization matrix is not positive definite");
  }
  if ((Omega * Qd - Qd * Omega).cwiseAbs().maxCoeff() > commute_tol)
    fail(errc::do_not_commute,
         "period and polarization matrices do not commute");

  Datum d;
  d.n = n;
  d.Omega = Omega;
  d.Q = Q;
  d.detQ = integer_determinant(Q);
  MatXd S = Qd * Omega.inverse();
  d.S = 0.5 * (S + S.transpose().eval());
  MatXd Si = d.S.inverse();
  d.S_inv = 0.5 * (Si + Si.transpose().eval());
  return d;
}

RiemannResiduals riemann_residuals(const Datum& d, double tol) {
  const MatXd Qinv = d.Q.cast<double>().inverse();
  const MatXd A = d.Omega * Qinv;
  const MatXd B = Qinv * d.Omega;
  RiemannResiduals r;
  r.r_commute = (A - B).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<MatXd> es(0.5 * (A + B + (A + B).transpose().eval()));
  r.pd_min = es.eigenvalues().minCoeff();
  r.pass = r.r_commute <= tol && r.pd_min > 0.0;
  return r;
}

std::vector<std::vector<rat>> intersection_points(const Datum& d) {
  const SmithDecomposition s = smith_normal_form(d.Q);
  const int n = d.n;
  std::vector<std::int64_t> diag(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    diag[static_cast<size_t>(i)] = s.D(i, i);
    if (diag[static_cast<size_t>(i)] <= 0)
      fail(errc::internal, "polarization matrix is singular");
  }

  std::vector<RatVec> points;
  std::vector<std::int64_t> k(static_cast<size_t>(n), 0);
  while (true) {
    RatVec x(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      rat acc(0);
      for (int i = 0; i < n; ++i)
        acc = acc + rat(s.V(j, i) * k[static_cast<size_t>(i)], diag[static_cast<size_t>(i)]);
      acc = acc - rat(acc.floor());  // into [0, 1)
      x[static_cast<size_t>(j)] = acc;
    }
    bool seen = false;
    for (const auto& p : points) {
      if (p == x) {
        seen = true;
        break;
      }
    }
    if (!seen) points.push_back(std::move(x));

    int i = n - 1;
    for (; i >= 0; --i) {
      if (++k[static_cast<size_t>(i)] < diag[static_cast<size_t>(i)]) break;
      k[static_cast<size_t>(i)] = 0;
    }
    if (i < 0) break;
  }

  if (static_cast<std::int64_t>(points.size()) != d.detQ)
    fail(errc::internal, "distinguished point count does not match det Q");
  std::sort(points.begin(), points.end(), rat_lex_less);
  return points;
}

WittenContext context(const Datum& d, double hbar) {
  if (hbar <= 0.0) fail(errc::invalid_numerics, "hbar must be positive");
  WittenContext ctx;
  ctx.n = d.n;
  ctx.hbar = hbar;
  const MatXd S = d.S;
  ctx.zeta = [S](const VecXd& xi) -> VecXd { return S * xi; };
  return ctx;
}

PathSpaceFunction witten_representative(const Datum& d,
                                        const std::vector<rat>& point,
                                        double hbar, const Box& box) {
  if (hbar <= 0.0) fail(errc::invalid_numerics, "hbar must be positive");
  if (static_cast<int>(point.size()) != d.n)
    fail(errc::invalid_input, "point dimension does not match datum");
  if (box.dim() != d.n)
    fail(errc::invalid_input, "working box dimension does not match datum");
  const int n = d.n;
  const MatXd S = d.S;
  const MatXd S_inv = d.S_inv;
  const RatMat Qinv = rat_inverse(d.Q);
  const RatVec pt = point;

  PathSpaceFunction f;
  f.n = n;
  f.working_box = box;

  // Coset membership: m is carried iff Q⁻¹ m + x_k ∈ ℤⁿ, tested exactly.
  f.in_support = [Qinv, pt, n](const VecXi& m) {
    for (int i = 0; i < n; ++i) {
      rat acc = pt[static_cast<size_t>(i)];
      for (int j = 0; j < n; ++j)
        acc = acc + Qinv[static_cast<size_t>(i)][static_cast<size_t>(j)] * rat(m(j));
      if (!acc.is_integer()) return false;
    }
    return true;
  };

  f.value = [S, S_inv, hbar, n](const VecXd& xi, const VecXi& m) -> cplx {
    VecXd u = S * xi;
    for (int i = 0; i < n; ++i) u(i) += static_cast<double>(m(i));
    const double e = -kPi / hbar * u.dot(S_inv * u);
    return cplx(std::exp(e), 0.0);
  };
  f.grad = [S, S_inv, hbar, n](const VecXd& xi, const VecXi& m) -> VecXcd {
    VecXd u = S * xi;
    for (int i = 0; i < n; ++i) u(i) += static_cast<double>(m(i));
    const double e = -kPi / hbar * u.dot(S_inv * u);
    const double v = std::exp(e);
    VecXcd g(n);
    for (int k = 0; k < n; ++k) g(k) = cplx(-2.0 * kPi / hbar * u(k) * v, 0.0);
    return g;
  };

  // Gaussian decay in the mode: uᵀS⁻¹u ≥ λ_min(S⁻¹)|u|² and
  // |Sξ+m|² ≥ |m|²/2 − |Sξ|², with |Sξ|² maximized over the corners of the
  // working box inflated by 10% per side (so the certificate stays valid a
  // little beyond the box).
  Eigen::SelfAdjointEigenSolver<MatXd> es(S_inv);
  const double lam = es.eigenvalues().minCoeff();
  if (lam <= 0.0) fail(errc::internal, "slope matrix lost positivity");
  Box big;
  big.lo = box.lo - 0.1 * (box.hi - box.lo);
  big.hi = box.hi + 0.1 * (box.hi - box.lo);
  double sup = 0.0;
  for (const VecXd& corner_fr : fraction_cube(n, {0.0, 1.0})) {
    const VecXd xi = big.at(corner_fr);
    sup = std::max(sup, (S * xi).squaredNorm());
  }
  f.decay.c = kPi * lam / (2.0 * hbar);
  f.decay.C = std::exp(kPi * lam / hbar * sup);
  return f;
}

cplx Theta::eval(const MatXd& Omega, const VecXd& x, const VecXd& ycheck) const {
  return section.eval(Omega * x, ycheck);
}

Theta theta_function(const Datum& d, const std::vector<rat>& point,
                     double hbar, const NumericsConfig& cfg) {
  cfg.validate();
  const int n = d.n;

  // Sample over (the bounding box of) one fundamental cell Ω·[0,1]ⁿ: every
  // downstream residual grid lives where the mode phases are moderate.
  Box box;
  box.lo = VecXd::Zero(n);
  box.hi = VecXd::Zero(n);
  bool first = true;
  for (const VecXd& corner_fr : fraction_cube(n, {0.0, 1.0})) {
    const VecXd xi = d.Omega * corner_fr;
    if (first) {
      box.lo = xi;
      box.hi = xi;
      first = false;
    } else {
      box.lo = box.lo.cwiseMin(xi);
      box.hi = box.hi.cwiseMax(xi);
    }
  }

  const PathSpaceFunction rep = witten_representative(d, point, hbar, box);
  ForwardResult fwd = forward_transform(rep, cfg);
  const WittenContext ctx = context(d, hbar);
  const ResidualReport dbar = dbar_residual(fwd.section, ctx, cfg);
  if (dbar.residual > cfg.residual_tol) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "holomorphy residual %.6g exceeds tolerance %.6g",
                  dbar.residual, cfg.residual_tol);
    fail(errc::residual_too_large, msg);
  }

  Theta t;
  t.point = point;
  t.hbar = hbar;
  t.section = std::move(fwd.section);
  t.truncation_bound = fwd.truncation_bound;
  t.dbar = dbar;
  return t;
}

AutomorphyReport automorphy_check(const Datum& d, const Theta& theta,
                                  int direction, const NumericsConfig& cfg,
                                  double tol) {
  cfg.validate();
  const int n = d.n;
  if (direction < 0 || direction >= n)
    fail(errc::invalid_input, "translation direction out of range");

  const std::vector<VecXd> xs = fraction_cube(n, {0.15, 0.45, 0.8});
  const std::vector<VecXd> ys = fraction_cube(n, {0.1, 0.4, 0.7});

  // Predicted unitary-frame factor exp(−2πi <Q e_j, y̌>).
  const VecXd qcol = d.Q.cast<double>().col(direction);

  struct Sample {
    cplx v0, v1;
    const VecXd* y;
  };
  std::vector<Sample> samples;
  double scale = 0.0;
  for (const VecXd& x : xs) {
    VecXd xp = x;
    xp(direction) += 1.0;
    for (const VecXd& y : ys) {
      Sample s{theta.eval(d.Omega, x, y), theta.eval(d.Omega, xp, y), &y};
      scale = std::max(scale, std::abs(s.v0));
      samples.push_back(s);
    }
  }
  if (scale <= 0.0)
    fail(errc::non_constant_ratio, "section vanishes on the sample grid");

  AutomorphyReport rep;
  rep.direction = direction;
  int used = 0;
  for (const Sample& s : samples) {
    if (std::abs(s.v0) < 0.05 * scale) continue;  // avoid theta zeros
    ++used;
    const double phase = qcol.dot(*s.y);
    const cplx predicted = std::polar(1.0, -2.0 * kPi * phase);
    const cplx ratio = s.v1 / s.v0 / predicted;
    rep.max_modulus_error =
        std::max(rep.max_modulus_error, std::abs(std::abs(ratio) - 1.0));
    rep.max_phase_error = std::max(rep.max_phase_error, std::abs(std::arg(ratio)));
  }
  if (used == 0)
    fail(errc::non_constant_ratio, "no usable samples away from zeros");
  if (rep.max_modulus_error > tol || rep.max_phase_error > tol) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "translation ratio deviates from the predicted factor by %.6g",
                  std::max(rep.max_modulus_error, rep.max_phase_error));
    fail(errc::non_constant_ratio, msg);
  }
  rep.pass = true;
  return rep;
}

double concentration_fraction(const Datum& d, const std::vector<rat>& point,
                              double hbar, double radius, int grid) {
  if (hbar <= 0.0) fail(errc::invalid_numerics, "hbar must be positive");
  if (radius <= 0.0 || grid < 2)
    fail(errc::invalid_input, "radius must be positive and grid at least 2");
  const int n = d.n;

  // Mode window wide enough that dropped Gaussians are negligible for ħ ≤ 1:
  // the displacement is Qx + m with x in one cell.
  int rowsum = 0;
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += std::abs(d.Q(i, j));
    rowsum = std::max<int>(rowsum, static_cast<int>(s));
  }
  const int R = rowsum + 8;

  const PathSpaceFunction rep =
      witten_representative(d, point, hbar, Box::cube(n, -1.0, 2.0));
  std::vector<VecXi> modes;
  {
    VecXi m = VecXi::Constant(n, -R);
    while (true) {
      if (rep.mode_allowed(m)) modes.push_back(m);
      int i = n - 1;
      for (; i >= 0; --i) {
        if (++m(i) <= R) break;
        m(i) = -R;
      }
      if (i < 0) break;
    }
  }

  const VecXd p = rat_to_vecxd(point);
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= grid;

  std::vector<double> mass(static_cast<size_t>(total), 0.0);
  std::vector<char> inside(static_cast<size_t>(total), 0);
  parallel_for(total, 0, [&](std::int64_t flat) {
    VecXd x(n);
    std::int64_t rem = flat;
    for (int i = n - 1; i >= 0; --i) {
      x(i) = (static_cast<double>(rem % grid) + 0.5) / grid;
      rem /= grid;
    }
    const VecXd xi = d.Omega * x;
    double rho = 0.0;
    for (const VecXi& m : modes) {
      const double a = std::abs(rep.value(xi, m));
      rho += a * a;
    }
    mass[static_cast<size_t>(flat)] = rho;
    double dist2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double di = std::abs(x(i) - p(i));
      di = std::min(di, 1.0 - di);  // torus wrap
      dist2 += di * di;
    }
    inside[static_cast<size_t>(flat)] = dist2 < radius * radius ? 1 : 0;
  });

  double num = 0.0, den = 0.0;
  for (std::int64_t i = 0; i < total; ++i) {
    den += mass[static_cast<size_t>(i)];
    if (inside[static_cast<size_t>(i)]) num += mass[static_cast<size_t>(i)];
  }
  if (den <= 0.0) fail(errc::internal, "section mass vanished on the grid");
  return num / den;
}

SpanReport span_report(const Datum& d, double hbar, const NumericsConfig& cfg) {
  cfg.validate();
  const auto points = intersection_points(d);
  const int N = static_cast<int>(points.size());
  std::vector<Theta> thetas;
  thetas.reserve(static_cast<size_t>(N));
  for (const auto& pt : points) thetas.push_back(theta_function(d, pt, hbar, cfg));

  SpanReport rep;
  rep.expected = d.detQ;

  SplitMix64 rng(cfg.seed);
  const int n = d.n;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::MatrixXcd M(N, N);
    for (int j = 0; j < N; ++j) {
      VecXd x(n), y(n);
      for (int i = 0; i < n; ++i) x(i) = rng.uniform();
      for (int i = 0; i < n; ++i) y(i) = rng.uniform();
      for (int i = 0; i < N; ++i)
        M(i, j) = thetas[static_cast<size_t>(i)].eval(d.Omega, x, y);
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

}  // namespace syzq::abelian
