#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "psdcert/linalg.hpp"
#include "psdcert/poly.hpp"

// Independent ground truth for the Hurwitz-based criteria. Nothing here
// touches Hurwitz determinants.

namespace psdcert::oracle {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // largest off-diagonal magnitude at exit
  int sweeps = 0;
};

inline constexpr int kDefaultMaxSweeps = 100;
inline constexpr std::size_t kDefaultMinorsCap = 12;

/// Cyclic complex Jacobi rotations until the off-diagonal Frobenius norm is
/// at most oracle_eig_tol * ||A||_F. Throws NoConvergence past max_sweeps.
Spectrum jacobi_eigenvalues(const HermitianMatrix<double>& a, const ToleranceConfig& cfg = {},
                            int max_sweeps = kDefaultMaxSweeps);

/// Exact PSD test: true iff all 2^n - 1 principal minors are >= 0.
/// Throws DimensionTooLarge when n > cap.
bool psd_oracle_minors(const HermitianMatrix<Rational>& a, std::size_t cap = kDefaultMinorsCap);

struct RootCounts {
  std::size_t negative = 0;  // distinct real roots in (-inf, 0)
  std::size_t zero = 0;      // 1 if z = 0 is a root
  std::size_t positive = 0;  // distinct real roots in (0, inf)

  friend bool operator==(const RootCounts&, const RootCounts&) = default;
};

/// Sturm-chain counts of distinct real roots by sign. Zero roots are
/// deflated and the rest reduced to square-free form via p / gcd(p, p').
RootCounts count_roots_negative(const RealPolynomial<Rational>& p);

/// Minimum Rayleigh quotient <x, A x> / ||x||^2 over `trials` random complex
/// vectors. Deterministic in `seed`.
double quadratic_form_min_sample(const HermitianMatrix<double>& a, std::size_t trials, std::uint64_t seed);

}  // namespace psdcert::oracle
