// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Quantization of principally-or-higher polarized abelian fibrations.
//
// Input datum: a symmetric positive-definite real period matrix Ω and a
// symmetric positive-definite integer polarization matrix Q with ΩQ = QΩ.
// The base torus carries coordinates x ∈ [0,1)ⁿ; the Witten-type base
// coordinate is ξ = Ωx and the slope field is ζ(ξ) = S ξ with S = QΩ⁻¹.
//
// Distinguished points are the |det Q| solutions of Qx ∈ ℤⁿ in [0,1)ⁿ.  To
// each the quantization attaches a Gaussian mode family A_k concentrated on
// one coset of Qℤⁿ, whose transform is a theta-type holomorphic section; the
// span of the |det Q| sections realizes the expected space of polarized
// sections.

#ifndef SYZQ_ABELIAN_HPP
#define SYZQ_ABELIAN_HPP

#include <string>
#include <vector>

#include "syzq/pathspace.hpp"
#include "syzq/rational.hpp"
#include "syzq/smith.hpp"
#include "syzq/transform.hpp"

namespace syzq::abelian {

using syzq::MatI;
using syzq::VecI;
using namespace syzq::core;

/// Validated quantization datum.
struct Datum {
  int n = 0;
  MatXd Omega;  ///< symmetric positive definite
  MatI Q;       ///< symmetric positive definite, integer
  MatXd S;      ///< slope matrix QΩ⁻¹ = Ω⁻¹Q (symmetric PD)
  MatXd S_inv;
  std::int64_t detQ = 0;
};

/// Throws: NotSymmetric / NotPositiveDefinite / NotIntegral / DoNotCommute.
/// Commutation is accepted when ‖ΩQ − QΩ‖_max ≤ commute_tol.
Datum validate_datum(const MatXd& Omega, const MatI& Q,
                     double commute_tol = 1e-12);

/// Compatibility residuals of the pair (Ω, Q):
///   r_commute = ‖ΩQ⁻¹ − Q⁻¹Ω‖_max (vanishes iff they commute),
///   pd_min    = smallest eigenvalue of ΩQ⁻¹ + Q⁻¹Ω (must be positive).
struct RiemannResiduals {
  double r_commute = 0.0;
  double pd_min = 0.0;
  bool pass = false;
};
RiemannResiduals riemann_residuals(const Datum& d, double tol = 1e-10);

/// The |det Q| points x ∈ [0,1)ⁿ with Qx ∈ ℤⁿ, exact and lex-sorted,
/// enumerated through the Smith normal form of Q.
std::vector<std::vector<rat>> intersection_points(const Datum& d);

/// Witten context of the datum: ζ(ξ) = Sξ.
WittenContext context(const Datum& d, double hbar);

/// Gaussian mode family attached to the distinguished point x_k:
///     A_m(ξ) = exp(−π ħ⁻¹ (Sξ + m)ᵀ S⁻¹ (Sξ + m))
/// supported on the modes m with Q⁻¹m + x_k ∈ ℤⁿ (one coset of Qℤⁿ; the
/// membership test is exact rational arithmetic).  Modes are indexed so that
/// the displacement at base x is Qx + m; with ξ = Ωx this family satisfies
/// d_W A = 0 identically.  Carries an analytic gradient and a decay
/// certificate over `box`.
PathSpaceFunction witten_representative(const Datum& d,
                                        const std::vector<rat>& point,
                                        double hbar, const Box& box);

/// Theta-type section produced from one distinguished point.
struct Theta {
  std::vector<rat> point;
  double hbar = 1.0;
  FourierSection section;       ///< unitary frame
  double truncation_bound = 0.0;
  ResidualReport dbar;

  /// Unitary-frame value at base x (internally ξ = Ωx) and fiber y̌.
  cplx eval(const MatXd& Omega, const VecXd& x, const VecXd& ycheck) const;
};

/// Transforms the representative at `point` and verifies holomorphy.
/// Throws: ResidualTooLarge when the ∂̄ residual exceeds cfg.residual_tol.
Theta theta_function(const Datum& d, const std::vector<rat>& point,
                     double hbar, const NumericsConfig& cfg);

/// Quasi-periodicity under the base translation x ↦ x + e_j: in the unitary
/// frame the ratio θ(x + e_j, y̌)/θ(x, y̌) must equal the j-independent-of-x
/// factor exp(−2πi <Q e_j, y̌>) at every sample point.
struct AutomorphyReport {
  int direction = 0;
  double max_modulus_error = 0.0;  ///< max | |ratio/predicted| − 1 |
  double max_phase_error = 0.0;    ///< max |arg(ratio/predicted)|
  bool pass = false;
};

/// Throws: NonConstantRatio when the ratio is not the predicted factor to
/// within tol at all sample points.
AutomorphyReport automorphy_check(const Datum& d, const Theta& theta,
                                  int direction, const NumericsConfig& cfg,
                                  double tol = 1e-8);

/// Fraction of the fiberwise L² mass of θ (at y̌-integrated modulus) carried
/// by the base ball of radius r around the distinguished point, on a
/// `grid`-point midpoint rule per dimension over one fundamental cell.
double concentration_fraction(const Datum& d, const std::vector<rat>& point,
                              double hbar, double radius, int grid);

/// Dimension witness: evaluates all |det Q| theta sections at |det Q| seeded
/// sample pairs (x, y̌) and reports the singular values of the row-normalized
/// evaluation matrix.
struct SpanReport {
  std::int64_t expected = 0;
  int rank = 0;
  double sigma_min = 0.0;  ///< smallest singular value after row scaling
  bool pass = false;
};
SpanReport span_report(const Datum& d, double hbar, const NumericsConfig& cfg);

}  // namespace syzq::abelian

#endif  // SYZQ_ABELIAN_HPP
