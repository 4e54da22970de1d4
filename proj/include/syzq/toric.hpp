// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Quantization of smooth projective toric manifolds over the open moment
// polytope, via the dual potential
//     φ(ξ) = (1/4π) log Σ_{u ∈ B∩ℤⁿ} c_u e^{4π <u, ξ>},   c_u > 0,
// on the open base ξ ∈ ℝⁿ (the Legendre dual of the polytope interior: the
// gradient dφ maps ℝⁿ diffeomorphically onto int B).
//
// Each lattice point u of the moment polytope B contributes the basis family
//     f_u(ξ, m) = e^{−2πφ(ξ)} e^{2π <u, ξ>}  on the single mode m = −u,
// whose transform is the character e^{−2πi <u, z>}, z = y̌ + iξ, times the
// canonical frame section with multiplier e^{−2πφ(ξ)}.  Degenerations of φ
// toward the boundary recover the facet data (moment-map limits), and a
// quantitative boundary criterion decides which offset vectors a arise from
// actual coefficient data on the same polytope.

#ifndef SYZQ_TORIC_HPP
#define SYZQ_TORIC_HPP

#include <map>
#include <string>
#include <vector>

#include "syzq/lattice.hpp"
#include "syzq/pathspace.hpp"
#include "syzq/transform.hpp"

namespace syzq::toric {

using syzq::MatI;
using syzq::VecI;
using namespace syzq::core;
using lattice::Fan;
using lattice::LatticePoint;
using lattice::Polytope;

/// Validated toric quantization datum.  All operations pin ħ = 1.
struct Datum {
  Fan fan;
  VecI lambda;
  Polytope polytope;
  std::vector<LatticePoint> points;      ///< B ∩ ℤⁿ, lex order
  std::map<std::vector<std::int64_t>, double> c;  ///< positive weights

  int n = 0;
  double weight(const VecI& u) const;  ///< c_u (validated present & > 0)
};

/// Builds fan + polytope + lattice points and validates the weights
/// (default: c ≡ 1 on all lattice points).
/// Throws: InvalidCoefficient when a weight is ≤ 0, not finite, or indexed
/// by a non-lattice-point of B.
Datum make_datum(const Fan& fan, const VecI& lambda,
                 const std::map<std::vector<std::int64_t>, double>& c = {});

/// Second-order jet of the potential at ξ, evaluated stably by
/// log-sum-exp with the max exponent factored out:
///   phi     = (1/4π) (log Σ c_u e^{4π<u,ξ> − M} + M),
///   grad    = Σ w_u u            (softmax weights w_u),
///   hess    = 4π (Σ w_u u uᵀ − grad gradᵀ).
struct Jet {
  double phi = 0.0;
  VecXd grad;
  MatXd hess;
  std::vector<double> weights;  ///< softmax weights, aligned with datum.points
};
Jet potential_jet(const Datum& d, const VecXd& xi);

/// Softmax moment of the facet function l_j:  Σ_u w_u(ξ) l_j(u).
/// Equal to l_j(dφ(ξ)) but computed without cancellation (every summand
/// is ≥ 0), so it stays accurate deep in the facet limit.
double facet_moment(const Datum& d, int facet, const VecXd& xi);

/// Boundary degeneration check for facet j: along ξ(t) = ξ₀ + t·v_j the
/// moment l_j(dφ) must decay to 0 like the leading exponential scale.
struct MomentLimitReport {
  int facet = 0;
  std::vector<double> values;  ///< facet moments at t = −1, −2, −3
  double residual = 0.0;       ///< value at t = −3
  bool decreasing = false;
  bool pass = false;
};
MomentLimitReport moment_limit_check(const Datum& d, int facet,
                                     double tol = 1e-3);

/// Curvature consistency: compares the analytic Hessian of φ against
/// 4th-order finite differences of the gradient at seeded sample points.
struct PrequantumReport {
  double residual = 0.0;   ///< max entrywise |FD − analytic| at step h
  double order = 0.0;      ///< measured convergence order from h₀ → h₀/2
  double h = 0.0;
  bool pass = false;
};
PrequantumReport prequantum_residual(const Datum& d, const NumericsConfig& cfg);

/// Fiber classification per lattice point u of B.
struct Fiber {
  VecI u;
  bool interior = false;
  VecXd xi;        ///< critical point of φ − <u,ξ> (interior points only)
  VecXd witness;   ///< inward witness ray of the limit face (boundary only)
  VecI triviality; ///< (l_j(u))_{j active} ≥ 0 at the limit vertex chart
};

/// All quantized fibers: interior points get their fiber located by a damped
/// Newton iteration on dφ(ξ) = u from ξ₀ = 0; boundary points get a witness
/// ray into the normal cone of their minimal face and the exact chart values.
/// Throws: NewtonDiverged if an interior solve fails to reach cfg.newton_tol.
std::vector<Fiber> bs_fibers(const Datum& d, const NumericsConfig& cfg);

/// Basis mode family of a lattice point u: supported on the single mode
/// m = −u with value e^{−2πφ(ξ)} e^{2π<u,ξ>} and analytic gradient.
/// Throws: NotALatticePoint if u ∉ B ∩ ℤⁿ.
PathSpaceFunction basis_function(const Datum& d, const VecI& u);

/// Verifies that the transform of basis_function(u) equals the character
/// e^{−2πi <u, z>}, z = y̌ + iξ, relative to the canonical frame with
/// multiplier e^{−2πφ(ξ)}, on a sample grid ξ ∈ [−0.3, 0.3]ⁿ.
ResidualReport character_match(const Datum& d, const VecI& u,
                               const NumericsConfig& cfg);

/// Growth classification of f_m(ξ) = e^{−2π(φ(ξ) − <m,ξ>)} for arbitrary
/// m ∈ ℤⁿ: bounded iff m ∈ B.  For m ∉ B some facet k has l_k(m) < 0 and f_m
/// grows like e^{−4π t l_k(m)} along ξ = −t·v_k; the test compares
/// f_m(3·(−v_k)) against f_m(0).
struct ExtendabilityReport {
  VecI m;
  bool in_polytope = false;       ///< exact membership
  bool classified_bounded = false;  ///< numeric growth classification
  double growth_ratio = 0.0;      ///< max over facet rays of f(3·(−v_k))/f(0)
  bool consistent = false;        ///< classification matches membership
};
ExtendabilityReport extendability_test(const Datum& d, const VecI& m);

/// Quantitative boundary criterion for an offset vector a ∈ ℤ^d: along each
/// facet degeneration ξ(t) = t·v_j + ξ_⊥ with t → −∞ the shifted potential
/// φ_a of the probe class must satisfy, with C_p = Σ_{l_j(u) = p} c_u,
///   e^{−4πt} · (∂_{v_j}φ_a)            →  2 C₁/C₀,
///   e^{−4πt} · Hess φ_a(v_j,v_j)/(2π)  →  2 C₁/C₀   (same constant),
///   e^{−2π(t_j+t_k)} · Hess φ_a(v_j,v_k) → 0  for transverse facet pairs.
/// Divergence of any scaled quantity ⇒ fail.
struct ConditionStarReport {
  VecI a;
  double worst_grad_error = 0.0;   ///< max_j |scaled grad − 2C₁/C₀| rel.
  double worst_hess_error = 0.0;   ///< max_j |scaled hess − 2C₁/C₀| rel.
  double worst_mixed = 0.0;        ///< max transverse cross term
  bool pass = false;
};
ConditionStarReport condition_star_report(const Datum& d, const VecI& a,
                                          const NumericsConfig& cfg);

/// Superpotential of the mirror Landau–Ginzburg model at z ∈ (ℂ*)ⁿ:
///     W(z) = Σ_j e^{−λ_j} z^{v_j},
/// defined on the subdomain where every term has modulus < 1.
/// Throws: OutsideMirrorDomain otherwise.
cplx superpotential(const Datum& d, const VecXcd& z);

/// Dimension witness over the basis characters, same scheme as the abelian
/// side: evaluation matrix at seeded samples, row-normalized SVD.
struct SpanReport {
  std::int64_t expected = 0;
  int rank = 0;
  double sigma_min = 0.0;
  bool pass = false;
};
SpanReport span_report(const Datum& d, const NumericsConfig& cfg);

/// Witten context of the datum at ħ = 1: ζ(ξ) = dφ(ξ).
WittenContext context(const Datum& d);

}  // namespace syzq::toric

#endif  // SYZQ_TORIC_HPP
