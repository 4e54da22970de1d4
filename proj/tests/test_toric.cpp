// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Toric quantization: dual potential, moment limits, fiber location,
// characters, extendability, boundary criterion, superpotential.
//
// Frozen oracles (independent closed forms, segment B = [0,2], weights 1):
//   φ(0)   = log(3)/(4π)
//   dφ(0)  = 1                          (symmetry)
//   dφ(t)  = (e^{4πt} + 2e^{8πt}) / (1 + e^{4πt} + e^{8πt})
//   φ''(0) = 8π/3                       (4π·(second moment − mean²))
//   W(z)   = z + e^{-2} z^{-1}, so W(i/2) = i(1/2 − 2e^{-2})
//   growth of the out-of-range exponent m = 3 over [0,2]:
//   f(3)/f(0) = sqrt(3)·e^{6π}·(1+e^{-12π}+e^{-24π})^{-1/2} ≈ 2.646e8

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "syzq/toric.hpp"

using namespace syzq;
using namespace syzq::toric;
using syzq::testing::code_of;
using syzq::testing::ieq;

namespace {

VecI vi1(std::int64_t a) {
  VecI v(1);
  v << a;
  return v;
}
VecI vi2(std::int64_t a, std::int64_t b) {
  VecI v(2);
  v << a, b;
  return v;
}
VecXd vd1(double a) {
  VecXd v(1);
  v << a;
  return v;
}
VecXd vd2(double a, double b) {
  VecXd v(2);
  v << a, b;
  return v;
}

Datum segment(int k) {
  return make_datum(lattice::fan_p1(), vi2(0, k));
}
Datum triangle(int d) {
  VecI lam(3);
  lam << 0, 0, d;
  return make_datum(lattice::fan_p2(), lam);
}

}  // namespace

TEST_CASE("datum validation") {
  auto d = segment(2);
  CHECK(d.points.size() == 3);
  CHECK(d.weight(vi1(1)) == 1.0);  // default weights are 1

  std::map<std::vector<std::int64_t>, double> bad{{{0}, 1.0}, {{1}, -0.5},
                                                  {{2}, 1.0}};
  CHECK(code_of([&] { make_datum(lattice::fan_p1(), vi2(0, 2), bad); }) ==
        errc::invalid_coefficient);
  std::map<std::vector<std::int64_t>, double> off{{{7}, 1.0}};
  CHECK(code_of([&] { make_datum(lattice::fan_p1(), vi2(0, 2), off); }) ==
        errc::invalid_coefficient);
}

TEST_CASE("potential jet: frozen segment values") {
  auto d = segment(2);
  auto j0 = potential_jet(d, vd1(0.0));
  CHECK(j0.phi == doctest::Approx(std::log(3.0) / (4.0 * kPi)).epsilon(1e-14));
  CHECK(j0.grad(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(j0.hess(0, 0) ==
        doctest::Approx(8.0 * kPi / 3.0).epsilon(1e-12));

  // Off-center closed form.
  const double t = 0.25;
  const double e1 = std::exp(4.0 * kPi * t), e2 = std::exp(8.0 * kPi * t);
  const double expect = (e1 + 2.0 * e2) / (1.0 + e1 + e2);
  auto jt = potential_jet(d, vd1(t));
  CHECK(jt.grad(0) == doctest::Approx(expect).epsilon(1e-12));

  // The gradient stays inside the open segment (0, 2).
  for (double s : {-2.0, -0.5, 0.0, 0.7, 2.0}) {
    auto js = potential_jet(d, vd1(s));
    CHECK(js.grad(0) > 0.0);
    CHECK(js.grad(0) < 2.0);
  }
  // Far out it is stable (log-sum-exp must not overflow) and saturates.
  CHECK(potential_jet(d, vd1(50.0)).grad(0) == doctest::Approx(2.0));
  CHECK(potential_jet(d, vd1(-50.0)).grad(0) == doctest::Approx(0.0));
}

TEST_CASE("weights respond to the coefficient data") {
  std::map<std::vector<std::int64_t>, double> c{{{0}, 4.0}, {{1}, 1.0},
                                                {{2}, 1.0}};
  auto d = make_datum(lattice::fan_p1(), vi2(0, 2), c);
  // At ξ=0 the softmax mean is (0·4 + 1 + 2)/6 = 1/2.
  CHECK(potential_jet(d, vd1(0.0)).grad(0) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("facet moment equals l_j(dφ) where both are computable") {
  auto d = triangle(2);
  const VecXd xi = vd2(0.1, -0.2);
  auto jet = potential_jet(d, xi);
  for (int j = 0; j < 3; ++j) {
    double direct = d.polytope.offsets(j);
    for (int i = 0; i < 2; ++i)
      direct += static_cast<double>(d.polytope.normals[j](i)) * jet.grad(i);
    CHECK(facet_moment(d, j, xi) == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("facet moments survive the deep degeneration regime") {
  // At ξ = -3·v_j the moment is ~(C₁/C₀)e^{-12π} ≈ 4.6e-17: a naive
  // l_j(dφ) evaluation would be pure cancellation noise at that scale.
  auto d = segment(2);
  const double m = facet_moment(d, 0, vd1(-3.0));
  CHECK(m > 0.0);
  CHECK(m == doctest::Approx(std::exp(-12.0 * kPi)).epsilon(1e-4));
}

TEST_CASE("moment limits along facet degenerations") {
  for (auto& d : {segment(2), triangle(3)}) {
    for (int j = 0; j < d.polytope.facet_count(); ++j) {
      auto rep = moment_limit_check(d, j);
      CHECK(rep.pass);
      CHECK(rep.residual <= 1e-3);
      CHECK(rep.decreasing);
      REQUIRE(rep.values.size() == 3);
      CHECK(rep.values[0] > rep.values[1]);
      CHECK(rep.values[1] > rep.values[2]);
    }
  }
}

TEST_CASE("curvature: finite differences confirm the analytic Hessian") {
  NumericsConfig cfg;
  for (auto& d : {segment(3), triangle(2)}) {
    auto rep = prequantum_residual(d, cfg);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-5);
    CHECK(rep.order >= 1.9);
  }
}

TEST_CASE("fibers: interior solves and boundary witnesses (segment)") {
  NumericsConfig cfg;
  auto d = segment(2);
  auto fibers = bs_fibers(d, cfg);
  REQUIRE(fibers.size() == 3);
  // Lex order of u: 0, 1, 2.
  CHECK(!fibers[0].interior);
  CHECK(fibers[1].interior);
  CHECK(!fibers[2].interior);
  // Interior fiber of u=1 sits at ξ=0 by symmetry.
  CHECK(std::abs(fibers[1].xi(0)) < 1e-8);
  // Witness rays point along the inward normals of the active facets.
  CHECK(fibers[0].witness(0) == doctest::Approx(1.0));
  CHECK(fibers[2].witness(0) == doctest::Approx(-1.0));
  // Chart values at the limit vertex: nonnegative integers, here 0.
  REQUIRE(fibers[0].triviality.size() == 1);
  CHECK(fibers[0].triviality(0) == 0);
}

TEST_CASE("fibers: triangle of size 3") {
  NumericsConfig cfg;
  auto d = triangle(3);
  auto fibers = bs_fibers(d, cfg);
  REQUIRE(fibers.size() == 10);
  int interior = 0;
  for (const auto& f : fibers) {
    if (f.interior) {
      ++interior;
      CHECK(ieq(f.u, vi2(1, 1)));
      auto jet = potential_jet(d, f.xi);
      CHECK((jet.grad - f.u.cast<double>()).norm() <= 1e-8);
    } else {
      // The witness ray drives every active facet moment to zero.
      CHECK(f.witness.norm() > 0.0);
      for (int j = 0; j < d.polytope.facet_count(); ++j) {
        if (d.polytope.eval_facet(j, f.u) == 0)
          CHECK(facet_moment(d, j, (-3.0 * f.witness).eval()) <= 1e-3);
      }
      for (int i = 0; i < f.triviality.size(); ++i)
        CHECK(f.triviality(i) >= 0);
    }
  }
  CHECK(interior == 1);

  // Edge point (2,0): lex-min vertex containing its facet is the origin,
  // whose chart reads off (l₁, l₂) = (2, 0).
  for (const auto& f : fibers) {
    if (ieq(f.u, vi2(2, 0))) {
      REQUIRE(f.triviality.size() == 2);
      CHECK(f.triviality(0) == 2);
      CHECK(f.triviality(1) == 0);
    }
  }
}

TEST_CASE("single-point polytope: everything degenerates consistently") {
  // All offsets zero: B = {0}, a single non-simple vertex where every facet
  // is active.  The potential is exactly constant, so the collapse below is
  // exact in floating point, not merely small.
  auto d = triangle(0);
  REQUIRE(d.points.size() == 1);
  CHECK(ieq(d.points[0].x, vi2(0, 0)));
  CHECK(!d.points[0].interior);

  auto jet = potential_jet(d, vd2(0.3, -1.7));
  CHECK(jet.phi == 0.0);
  CHECK(jet.grad.norm() == 0.0);
  CHECK(jet.hess.norm() == 0.0);
  for (int j = 0; j < d.polytope.facet_count(); ++j)
    CHECK(facet_moment(d, j, vd2(0.3, -1.7)) == 0.0);

  NumericsConfig cfg;
  auto fibers = bs_fibers(d, cfg);
  REQUIRE(fibers.size() == 1);
  CHECK(!fibers[0].interior);
  // The three inward normals sum to zero, so the witness ray collapses too.
  CHECK(fibers[0].witness.norm() == 0.0);
  REQUIRE(fibers[0].triviality.size() == 2);
  CHECK(fibers[0].triviality(0) == 0);
  CHECK(fibers[0].triviality(1) == 0);

  // The only class is bounded; any shift off the point blows up at the
  // frozen rate e^{6π} (constant numerator against the probe's exponent).
  CHECK(extendability_test(d, vi2(0, 0)).classified_bounded);
  auto bad = extendability_test(d, vi2(1, 0));
  CHECK(!bad.classified_bounded);
  CHECK(bad.growth_ratio == doctest::Approx(std::exp(6.0 * kPi)));
}

TEST_CASE("basis functions and character match") {
  auto d = triangle(1);
  NumericsConfig cfg;
  // u must be a lattice point of B.
  CHECK(code_of([&] { basis_function(d, vi2(5, 5)); }) ==
        errc::not_a_lattice_point);

  auto f = basis_function(d, vi2(1, 0));
  // Support is the single mode m = -u.
  REQUIRE(f.support.size() == 1);
  CHECK(f.support[0](0) == -1);
  CHECK(f.support[0](1) == 0);
  // Value agrees with the closed form e^{-2π(φ - <u,ξ>)}.
  const VecXd xi = vd2(0.2, -0.1);
  const double phi = potential_jet(d, xi).phi;
  VecXi m(2);
  m << -1, 0;
  CHECK(std::abs(f.value(xi, m) - std::exp(-2.0 * kPi * (phi - 0.2))) <
        1e-14);

  for (auto u : {vi2(0, 0), vi2(1, 0), vi2(0, 1)}) {
    auto rep = character_match(d, u, cfg);
    CHECK(rep.residual < 1e-10);
    CHECK(rep.pass);
  }
}

TEST_CASE("transformed basis sections are holomorphic for ζ = dφ") {
  auto d = segment(2);
  NumericsConfig cfg;
  auto f = basis_function(d, vi1(1));
  auto fwd = forward_transform(f, cfg);
  fwd.section.working_box = Box::cube(1, -0.3, 0.3);
  auto rep = dbar_residual(fwd.section, context(d), cfg);
  CHECK(rep.residual <= 1e-6);
}

TEST_CASE("extendability: frozen growth ratio for m=3 over [0,2]") {
  auto d = segment(2);
  auto in = extendability_test(d, vi1(1));
  CHECK(in.in_polytope);
  CHECK(in.classified_bounded);
  CHECK(in.consistent);

  auto out = extendability_test(d, vi1(3));
  CHECK(!out.in_polytope);
  CHECK(!out.classified_bounded);
  CHECK(out.consistent);
  const double frozen =
      std::sqrt(3.0) * std::exp(6.0 * kPi) /
      std::sqrt(1.0 + std::exp(-12.0 * kPi) + std::exp(-24.0 * kPi));
  CHECK(out.growth_ratio == doctest::Approx(frozen).epsilon(1e-10));
  CHECK(out.growth_ratio > 2.6e8);
  CHECK(out.growth_ratio < 2.7e8);
}

TEST_CASE("extendability: every probe in twice the bounding box is consistent") {
  auto d = triangle(2);
  for (std::int64_t a = -1; a <= 3; ++a) {
    for (std::int64_t b = -1; b <= 3; ++b) {
      auto rep = extendability_test(d, vi2(a, b));
      CHECK(rep.consistent);
      CHECK(rep.in_polytope == d.polytope.contains(vi2(a, b)));
    }
  }
}

TEST_CASE("boundary criterion passes the datum's own class, fails a shift") {
  NumericsConfig cfg;
  for (auto& d : {segment(1), segment(2), triangle(1), triangle(3)}) {
    auto ok = condition_star_report(d, d.lambda, cfg);
    CHECK(ok.pass);
    CHECK(ok.worst_grad_error < 1e-8);
    CHECK(ok.worst_hess_error < 1e-8);
    CHECK(ok.worst_mixed < 1e-6);

    VecI shifted = d.lambda;
    shifted(0) += 1;
    auto bad = condition_star_report(d, shifted, cfg);
    CHECK(!bad.pass);
  }
}

TEST_CASE("boundary criterion with non-uniform weights") {
  std::map<std::vector<std::int64_t>, double> c{
      {{0, 0}, 2.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}};
  VecI lam(3);
  lam << 0, 0, 1;
  auto d = make_datum(lattice::fan_p2(), lam, c);
  NumericsConfig cfg;
  auto ok = condition_star_report(d, d.lambda, cfg);
  CHECK(ok.pass);
}

TEST_CASE("superpotential: frozen segment value and domain guard") {
  auto d = segment(2);
  VecXcd z(1);
  z(0) = cplx(0.0, 0.5);
  const cplx w = superpotential(d, z);
  CHECK(std::abs(w - cplx(0.0, 0.5 - 2.0 * std::exp(-2.0))) < 1e-15);
  CHECK(w.imag() == doctest::Approx(0.2293294335267746).epsilon(1e-12));

  z(0) = cplx(2.0, 0.0);  // |z| ≥ 1: first term leaves the domain
  CHECK(code_of([&] { superpotential(d, z); }) ==
        errc::outside_mirror_domain);
  z(0) = cplx(0.0, 0.0);
  CHECK(code_of([&] { superpotential(d, z); }) == errc::invalid_input);

  // Triangle: W = z₁ + z₂ + e^{-1}/(z₁z₂) at z = (0.8, 0.8).
  auto d2 = triangle(1);
  VecXcd z2(2);
  z2 << cplx(0.8, 0.0), cplx(0.8, 0.0);
  const cplx w2 = superpotential(d2, z2);
  CHECK(std::abs(w2 - cplx(1.6 + std::exp(-1.0) / 0.64, 0.0)) < 1e-14);
}

TEST_CASE("span witness matches the lattice point count") {
  NumericsConfig cfg;
  auto d = segment(3);
  auto rep = span_report(d, cfg);
  CHECK(rep.expected == 4);
  CHECK(rep.rank == 4);
  CHECK(rep.sigma_min > 1e-6);
  CHECK(rep.pass);

  auto d2 = triangle(1);
  auto rep2 = span_report(d2, cfg);
  CHECK(rep2.expected == 3);
  CHECK(rep2.rank == 3);
  CHECK(rep2.pass);
}
