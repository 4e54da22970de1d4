// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// The fiberwise Fourier-type transform between mode families and sections.
//
// Forward: a mode family f_m(ξ) maps to the section Σ_m f_m(ξ) e^{2πi <m,y̌>}
// (degree 0), and a one-form Σ_k w_k dξ^k maps to
//     (iħ/2) Σ_k [ Σ_m w_{k,m}(ξ) e^{2πi <m,y̌>} ] dz̄^k
// in complex coordinates z = y̌ + i ħ⁻¹ ξ.  In these coordinates
//     ∂/∂z̄^k = ½ ∂_{y̌^k} + (iħ/2) ∂_{ξ^k},
// and the deformed differential d_W on mode families intertwines with the
// connection operator ∂̄_ħ = ∂̄ + iπ (ζ(ξ), dz̄) on sections; the residual
// checks below verify both identities numerically.
//
// Inverse: coefficients are recovered by fiber integration,
//     f_m(ξ) = ∫ s(ξ, y̌) e^{−2πi <m,y̌>} dy̌,
// realized as an exact DFT average over a G-point grid per dimension, which
// is error-free for band-limited sections with max mode < G/2.

#ifndef SYZQ_TRANSFORM_HPP
#define SYZQ_TRANSFORM_HPP

#include <functional>
#include <string>
#include <vector>

#include "syzq/pathspace.hpp"

namespace syzq::core {

/// d_W f as a one-form on modes: component k carries
///     ∂f_m/∂ξ^k + 2π ħ⁻¹ (m_k + ζ_k(ξ)) f_m(ξ).
/// Uses the analytic gradient when present, else 4th-order finite
/// differences with step cfg.fd_step.
PathSpaceOneForm witten_apply(const PathSpaceFunction& f,
                              const WittenContext& ctx,
                              const NumericsConfig& cfg);

/// Forward transform of a mode family, truncated to |m|_∞ ≤ cfg.truncation
/// (intersected with the declared support).
struct ForwardResult {
  FourierSection section;
  double truncation_bound = 0.0;  ///< bound on the dropped-mode mass
};

/// Throws: DecayViolated when the family has no finite support inside the
/// window and its samples at |m|_∞ ∈ {R, R+1} exceed the decay certificate.
ForwardResult forward_transform(const PathSpaceFunction& f,
                                const NumericsConfig& cfg);

/// Forward transform of a one-form: applies the (iħ/2) prefactor per dz̄^k.
struct ForwardOneFormResult {
  FourierOneForm form;
  double truncation_bound = 0.0;
};
ForwardOneFormResult forward_transform(const PathSpaceOneForm& w,
                                       const NumericsConfig& cfg);

/// Inverse transform by DFT over a cfg.grid-point fiber grid per dimension.
/// Recovered modes cover |m|_∞ ≤ cfg.truncation.
/// Throws: NyquistViolated if cfg.truncation ≥ cfg.grid / 2.
PathSpaceFunction inverse_transform(
    const std::function<cplx(const VecXd& xi, const VecXd& ycheck)>& section,
    int n, const NumericsConfig& cfg);

/// Grid-sampled residual report for the operator identities.
struct ResidualReport {
  double residual = 0.0;   ///< max absolute defect over the sample grid
  double h = 0.0;          ///< finite-difference step used
  int truncation = 0;
  int grid = 0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Max over a fixed interior sample grid of
///     | (½ D_{y̌^k} + (iħ/2) D_{ξ^k}) s + iπ ζ_k(ξ) s |,   k = 1..n,
/// i.e. the k-th coefficient of ∂̄_ħ s for a section expected to be
/// holomorphic.  Derivatives are 4th-order finite differences.
ResidualReport dbar_residual(const FourierSection& s, const WittenContext& ctx,
                             const NumericsConfig& cfg);

/// Defect of the intertwining identity on a concrete family f:
/// compares the forward transform of d_W f against ∂̄_ħ applied to the
/// forward transform of f, coefficient-wise on a sample grid.
ResidualReport intertwining_residual(const PathSpaceFunction& f,
                                     const WittenContext& ctx,
                                     const NumericsConfig& cfg);

/// Max over sample points/modes of |f_m(ξ) − (inverse ∘ forward f)_m(ξ)|.
double roundtrip_error(const PathSpaceFunction& f, const NumericsConfig& cfg);

}  // namespace syzq::core

#endif  // SYZQ_TRANSFORM_HPP
