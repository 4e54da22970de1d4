// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Typed error conditions for the syzq library.  Every failure mode that a
// caller can trigger through bad data or bad configuration is represented by
// an errc value; syzq::error carries the code plus a human-readable message.
// The C API maps these onto integer status codes.

#ifndef SYZQ_ERRORS_HPP
#define SYZQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace syzq {

enum class errc {
  ok = 0,

  // configuration / input parsing
  invalid_input,
  invalid_numerics,

  // lattice geometry
  unbounded,
  non_smooth_vertex,
  degenerate_vertex,

  // transforms
  decay_violated,
  nyquist_violated,
  missing_derivative,

  // abelian mirror data
  not_symmetric,
  not_positive_definite,
  not_integral,
  do_not_commute,
  not_a_critical_point,
  residual_too_large,
  non_constant_ratio,

  // toric data
  newton_diverged,
  not_a_lattice_point,
  outside_mirror_domain,
  invalid_coefficient,

  internal,
};

/// Stable identifier string for an error code (used in reports and the C API).
const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::ok: return "Ok";
    case errc::invalid_input: return "InvalidInput";
    case errc::invalid_numerics: return "InvalidNumerics";
    case errc::unbounded: return "Unbounded";
    case errc::non_smooth_vertex: return "NonSmoothVertex";
    case errc::degenerate_vertex: return "DegenerateVertex";
    case errc::decay_violated: return "DecayViolated";
    case errc::nyquist_violated: return "NyquistViolated";
    case errc::missing_derivative: return "MissingDerivative";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::not_positive_definite: return "NotPositiveDefinite";
    case errc::not_integral: return "NotIntegral";
    case errc::do_not_commute: return "DoNotCommute";
    case errc::not_a_critical_point: return "NotACriticalPoint";
    case errc::residual_too_large: return "ResidualTooLarge";
    case errc::non_constant_ratio: return "NonConstantRatio";
    case errc::newton_diverged: return "NewtonDiverged";
    case errc::not_a_lattice_point: return "NotALatticePoint";
    case errc::outside_mirror_domain: return "OutsideMirrorDomain";
    case errc::invalid_coefficient: return "InvalidCoefficient";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace syzq

#endif  // SYZQ_ERRORS_HPP
