// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Function spaces on the mode bundle over the base.
//
// Objects live on pairs (ξ, m) with ξ ∈ ℝⁿ a base point and m ∈ ℤⁿ a fiber
// mode.  A "path-space function" is a mode-indexed family of smooth functions
// f_m(ξ) equipped with either an explicit finite support or a membership test
// plus a Gaussian decay certificate
//     |f_m(ξ)| ≤ C · exp(−c·|m|²)   for ξ in the working box,
// which the transform layer uses to bound mode-truncation error.

#ifndef SYZQ_PATHSPACE_HPP
#define SYZQ_PATHSPACE_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzq/numerics.hpp"

namespace syzq::core {

using VecXi = Eigen::VectorXi;

/// Uniform Gaussian decay bound in the mode variable over a working box.
struct DecayCertificate {
  double C = 0.0;  ///< prefactor; C = 0 means "no certificate"
  double c = 0.0;  ///< exponential rate in |m|²
  bool valid() const { return C > 0.0 && c > 0.0; }
  /// Upper bound for the total mass of all modes with |m|_∞ > R, in dim n.
  double tail_bound(int R, int n) const;
};

/// Mode-indexed family f_m(ξ); the core input of the forward transform.
struct PathSpaceFunction {
  int n = 0;

  /// f_m(ξ).  Required.
  std::function<cplx(const VecXd& xi, const VecXi& m)> value;

  /// ∂f_m/∂ξ (all n components).  Optional; finite differences otherwise.
  std::function<VecXcd(const VecXd& xi, const VecXi& m)> grad;

  /// Finite support: exact list of modes carrying the function.  If empty,
  /// `in_support` (when set) restricts the mode window instead.
  std::vector<VecXi> support;
  std::function<bool(const VecXi& m)> in_support;

  DecayCertificate decay;
  Box working_box;

  bool has_finite_support() const { return !support.empty(); }
  bool mode_allowed(const VecXi& m) const;
};

/// One-form version: n coefficient families w_k,m(ξ) against dξ^k.
struct PathSpaceOneForm {
  int n = 0;
  /// component(k) = coefficient family of dξ^k.
  std::vector<PathSpaceFunction> components;
};

/// Deformed differential data: d_W f = df + 2π ħ⁻¹ (m + ζ(ξ), dξ) f on the
/// mode-m component.  ζ encodes the potential via its gradient-type field.
struct WittenContext {
  int n = 0;
  std::function<VecXd(const VecXd& xi)> zeta;
  double hbar = 1.0;
};

/// Frame tags for sections on the mirror side.  `unitary` is the frame in
/// which coefficients are plain functions of (ξ, y̌); `holomorphic_scaled`
/// marks sections whose stated coefficients must be multiplied by
/// `frame_multiplier(ξ)` to recover unitary-frame values.
enum class FrameTag { unitary, holomorphic_scaled };

/// Finite Fourier section  s(ξ, y̌) = Σ_m α_m(ξ) e^{2πi <m, y̌>}  on the
/// mirror torus fibration, with y̌ ∈ [0,1)ⁿ.
struct FourierSection {
  int n = 0;
  int truncation = 0;  ///< coefficients cover |m|_∞ ≤ truncation (∩ support)
  std::vector<std::pair<VecXi, std::function<cplx(const VecXd& xi)>>> coeffs;
  FrameTag frame = FrameTag::unitary;
  std::function<double(const VecXd& xi)> frame_multiplier;  ///< optional
  Box working_box;

  /// Unitary-frame value at (ξ, y̌).
  cplx eval(const VecXd& xi, const VecXd& ycheck) const;
  /// Single coefficient α_m(ξ); zero if m is not stored.
  cplx coeff(const VecXi& m, const VecXd& xi) const;
};

/// Anti-holomorphic one-form with section coefficients: Σ_k s_k ⊗ dz̄^k.
struct FourierOneForm {
  int n = 0;
  std::vector<FourierSection> components;
};

}  // namespace syzq::core

#endif  // SYZQ_PATHSPACE_HPP
