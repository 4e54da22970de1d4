// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Abelian quantization: datum validation, distinguished points, Gaussian
// representatives, theta-type sections, quasi-periodicity, concentration.
//
// Frozen oracles (independent closed forms):
//   Σ_{m∈ℤ} e^{-πm²}        = 1.0864348112133080   (classical lattice sum;
//                                                    the |m|>6 tail is <1e-60)
//   e^{-π}                   = 0.0432139182637723
//   mass fraction in |x|<r   ≈ erf(r·sqrt(2π/ħ))    (ħ=0.1 images <1e-15)

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "helpers.hpp"
#include "syzq/abelian.hpp"

using namespace syzq;
using namespace syzq::abelian;
using syzq::testing::code_of;

namespace {

MatXd matd1(double a) {
  MatXd m(1, 1);
  m << a;
  return m;
}
MatI mati1(std::int64_t a) {
  MatI m(1, 1);
  m << a;
  return m;
}
MatXd matd2(double a, double b, double c, double d) {
  MatXd m(2, 2);
  m << a, b, c, d;
  return m;
}
MatI mati2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  MatI m(2, 2);
  m << a, b, c, d;
  return m;
}

Datum unit_datum() { return validate_datum(matd1(1.0), mati1(1)); }

}  // namespace

TEST_CASE("datum validation accepts the catalog and rejects bad pairs") {
  CHECK(unit_datum().detQ == 1);
  CHECK(validate_datum(matd1(0.8), mati1(2)).detQ == 2);
  CHECK(validate_datum(matd2(1.5, 0.5, 0.5, 1.5), mati2(2, 1, 1, 2)).detQ ==
        3);
  CHECK(validate_datum(matd2(1.1, 0.0, 0.0, 0.7), mati2(3, 0, 0, 2)).detQ ==
        6);

  CHECK(code_of([] {
          validate_datum(matd2(1.0, 0.1, 0.0, 1.0), mati2(1, 0, 0, 1));
        }) == errc::not_symmetric);
  CHECK(code_of([] {
          validate_datum(matd2(1.0, 2.0, 2.0, 1.0), mati2(1, 0, 0, 1));
        }) == errc::not_positive_definite);
  CHECK(code_of([] {
          // Symmetric but indefinite polarization.
          validate_datum(matd2(1.0, 0.0, 0.0, 1.0), mati2(1, 1, 1, -1));
        }) == errc::not_positive_definite);
  CHECK(code_of([] {
          // diag(1,2) and [[2,1],[1,2]] do not commute.
          validate_datum(matd2(1.0, 0.0, 0.0, 2.0), mati2(2, 1, 1, 2));
        }) == errc::do_not_commute);
}

TEST_CASE("compatibility residuals") {
  auto d = validate_datum(matd2(1.5, 0.5, 0.5, 1.5), mati2(2, 1, 1, 2));
  auto rr = riemann_residuals(d);
  CHECK(rr.r_commute < 1e-12);
  CHECK(rr.pd_min > 0.0);
  CHECK(rr.pass);
}

TEST_CASE("slope matrix is symmetric positive definite") {
  auto d = validate_datum(matd2(1.5, 0.5, 0.5, 1.5), mati2(2, 1, 1, 2));
  CHECK((d.S - d.S.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<MatXd> es(d.S);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  // S·Ω == Q.
  CHECK((d.S * d.Omega - d.Q.cast<double>()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("distinguished points: exact, sorted, |det Q| of them") {
  auto d3 = validate_datum(matd1(1.3), mati1(3));
  auto pts = intersection_points(d3);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0][0] == rat(0));
  CHECK(pts[1][0] == rat(1, 3));
  CHECK(pts[2][0] == rat(2, 3));

  auto d = validate_datum(matd2(1.5, 0.5, 0.5, 1.5), mati2(2, 1, 1, 2));
  auto pts2 = intersection_points(d);
  REQUIRE(pts2.size() == 3);
  // First point is the origin; all satisfy Q·x ∈ ℤ² exactly.
  CHECK(pts2[0][0] == rat(0));
  CHECK(pts2[0][1] == rat(0));
  for (const auto& p : pts2) {
    for (int i = 0; i < 2; ++i) {
      rat acc(0);
      for (int j = 0; j < 2; ++j) acc = acc + rat(d.Q(i, j)) * p[j];
      CHECK(acc.is_integer());
    }
    CHECK(p[0] >= rat(0));
    CHECK(p[0] < rat(1));
  }
  // Lex sorted and distinct.
  for (size_t i = 1; i < pts2.size(); ++i) {
    CHECK((pts2[i - 1][0] < pts2[i][0] ||
           (pts2[i - 1][0] == pts2[i][0] && pts2[i - 1][1] < pts2[i][1])));
  }
}

TEST_CASE("representative family is annihilated by the deformed differential") {
  auto d = validate_datum(matd1(1.3), mati1(3));
  const double hbar = 1.0;
  auto pts = intersection_points(d);
  auto box = Box::cube(1, -0.2, 1.2 * 1.3);
  auto f = witten_representative(d, pts[1], hbar, box);
  auto ctx = context(d, hbar);
  NumericsConfig cfg;
  auto dW = witten_apply(f, ctx, cfg);
  double worst = 0.0;
  for (int m = -4; m <= 4; ++m) {
    VecXi mode(1);
    mode << m;
    if (!f.mode_allowed(mode)) continue;
    for (double x : {0.1, 0.4, 0.9}) {
      VecXd xi(1);
      xi << 1.3 * x;
      worst = std::max(worst, std::abs(dW.components[0].value(xi, mode)));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("representative support is one exact coset") {
  auto d = validate_datum(matd1(1.3), mati1(3));
  auto pts = intersection_points(d);
  auto box = Box::cube(1, -0.5, 2.0);
  // Point 1/3: allowed modes are m with m/3 + 1/3 ∈ ℤ, i.e. m ≡ -1 mod 3.
  auto f = witten_representative(d, pts[1], 1.0, box);
  VecXi m(1);
  for (int v = -6; v <= 6; ++v) {
    m << v;
    CHECK(f.mode_allowed(m) == (((v + 1) % 3 + 3) % 3 == 0));
  }
}

TEST_CASE("theta value at the origin is the classical lattice sum (frozen)") {
  auto d = unit_datum();
  NumericsConfig cfg;
  cfg.truncation = 8;
  auto pts = intersection_points(d);
  auto theta = theta_function(d, pts[0], 1.0, cfg);

  VecXd zero = VecXd::Zero(1);
  const cplx at0 = theta.eval(d.Omega, zero, zero);
  CHECK(at0.real() == doctest::Approx(1.0864348112133080).epsilon(1e-12));
  CHECK(std::abs(at0.imag()) < 1e-14);

  // Individual coefficient at mode 1, base 0: e^{-π} (frozen).
  VecXi one(1);
  one << 1;
  const cplx c1 = theta.section.coeff(one, zero);
  CHECK(c1.real() == doctest::Approx(0.0432139182637723).epsilon(1e-12));

  // Holomorphy certificate.
  CHECK(theta.dbar.residual <= 1e-6);
  CHECK(theta.dbar.pass);
  CHECK(theta.truncation_bound < 1e-10);
}

TEST_CASE("theta eval matches the hand-rolled lattice sum off the origin") {
  auto d = unit_datum();
  NumericsConfig cfg;
  cfg.truncation = 8;
  auto theta = theta_function(d, intersection_points(d)[0], 1.0, cfg);
  const double x = 0.2, y = 0.35;
  cplx expect = 0.0;
  for (int m = -8; m <= 8; ++m)
    expect += std::exp(-kPi * (x + m) * (x + m)) *
              std::exp(kTwoPiI * static_cast<double>(m) * y);
  VecXd xv(1), yv(1);
  xv << x;
  yv << y;
  CHECK(std::abs(theta.eval(d.Omega, xv, yv) - expect) < 1e-13);
}

TEST_CASE("theta sections for different points use disjoint mode cosets") {
  auto d = validate_datum(matd1(1.0), mati1(2));
  NumericsConfig cfg;
  auto pts = intersection_points(d);
  REQUIRE(pts.size() == 2);
  auto t0 = theta_function(d, pts[0], 1.0, cfg);
  auto t1 = theta_function(d, pts[1], 1.0, cfg);
  // Point 0 carries even modes, point 1/2 carries odd modes.
  for (const auto& [m, fn] : t0.section.coeffs) CHECK(m(0) % 2 == 0);
  for (const auto& [m, fn] : t1.section.coeffs) CHECK(std::abs(m(0)) % 2 == 1);
}

TEST_CASE("quasi-periodicity under unit base translations") {
  auto d = validate_datum(matd1(1.0), mati1(2));
  NumericsConfig cfg;
  auto theta = theta_function(d, intersection_points(d)[1], 1.0, cfg);
  auto rep = automorphy_check(d, theta, 0, cfg);
  CHECK(rep.pass);
  CHECK(rep.max_modulus_error < 1e-8);
  CHECK(rep.max_phase_error < 1e-8);

  // Direct pin of the predicted factor at one point: the ratio is
  // exp(-2πi·(Q e_j, y̌)), here exp(-4πi y̌).
  VecXd x(1), y(1);
  x << 0.3;
  y << 0.15;
  VecXd xs(1);
  xs << 1.3;
  const cplx ratio =
      theta.eval(d.Omega, xs, y) / theta.eval(d.Omega, x, y);
  const cplx predicted = std::exp(-kTwoPiI * 2.0 * 0.15);
  CHECK(std::abs(ratio - predicted) < 1e-10);

  // 2D automorphy on a non-diagonal datum.
  auto d2 = validate_datum(matd2(1.5, 0.5, 0.5, 1.5), mati2(2, 1, 1, 2));
  auto theta2 = theta_function(d2, intersection_points(d2)[1], 1.0, cfg);
  for (int j = 0; j < 2; ++j) {
    auto rep2 = automorphy_check(d2, theta2, j, cfg);
    CHECK(rep2.pass);
  }
}

TEST_CASE("mass concentration near the distinguished point (erf oracle)") {
  auto d = unit_datum();
  auto pts = intersection_points(d);
  const double frac = concentration_fraction(d, pts[0], 0.1, 0.25, 256);
  const double oracle = std::erf(0.25 * std::sqrt(2.0 * kPi / 0.1));
  CHECK(frac == doctest::Approx(oracle).epsilon(2e-3));
  CHECK(frac > 0.99);
  // Less semiclassical -> less concentrated.
  const double frac_h1 = concentration_fraction(d, pts[0], 1.0, 0.25, 256);
  CHECK(frac_h1 < frac);
}

TEST_CASE("span witness matches |det Q|") {
  NumericsConfig cfg;
  auto d2 = validate_datum(matd1(0.8), mati1(2));
  auto rep = span_report(d2, 1.0, cfg);
  CHECK(rep.expected == 2);
  CHECK(rep.rank == 2);
  CHECK(rep.sigma_min > 1e-6);
  CHECK(rep.pass);

  auto d3 = validate_datum(matd2(1.5, 0.5, 0.5, 1.5), mati2(2, 1, 1, 2));
  auto rep3 = span_report(d3, 1.0, cfg);
  CHECK(rep3.expected == 3);
  CHECK(rep3.rank == 3);
  CHECK(rep3.pass);
}

TEST_CASE("theta rejects an impossible residual tolerance") {
  auto d = unit_datum();
  NumericsConfig cfg;
  cfg.residual_tol = 1e-18;  // below the finite-difference floor
  CHECK(code_of([&] {
          theta_function(d, intersection_points(d)[0], 1.0, cfg);
        }) == errc::residual_too_large);
}
