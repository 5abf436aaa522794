#pragma once

#include "psdcert/scalar.hpp"

namespace psdcert {

/// Every numerical threshold used by the float regime. All are relative.
/// The exact regime ignores them and compares identically.
struct ToleranceConfig {
  /// Allowed |a_ij - conj(a_ji)| relative to the largest entry magnitude.
  double hermitian_tol = 1e-10;
  /// Radius, relative to the root scale, inside which a root counts as zero.
  double zero_coeff_tol = 1e-10;
  /// Relative root perturbation under which a Hurwitz determinant must keep
  /// its sign; otherwise the verdict is Boundary.
  double boundary_band = 1e-9;
  /// Jacobi stopping threshold on the off-diagonal norm, relative to ||A||_F.
  double oracle_eig_tol = 1e-10;
  /// Largest scaled discrepancy tolerated between the trace and minor
  /// constructions of the characteristic polynomial.
  double construction_tol = 1e-8;

  /// Throws PreconditionViolated when a field is negative or not finite.
  void validate() const;

  static ToleranceConfig exact() { return {0.0, 0.0, 0.0, 0.0, 0.0}; }
};

/// The configuration actually applied in a regime: all zeros when exact.
template <class T>
ToleranceConfig effective(const ToleranceConfig& cfg) {
  if constexpr (is_exact_v<T>) {
    return ToleranceConfig::exact();
  } else {
    cfg.validate();
    return cfg;
  }
}

}  // namespace psdcert
