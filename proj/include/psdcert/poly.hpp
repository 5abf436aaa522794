#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psdcert/matrix.hpp"
#include "psdcert/tolerance.hpp"

namespace psdcert {

/// p(z) = b0 z^n + b1 z^(n-1) + ... + bn with real coefficients and b0 > 0.
/// coeffs()[k] is b_k; indices past the degree read as zero.
template <class T>
class RealPolynomial {
 public:
  /// Throws InvalidPolynomial when empty, non-finite, or b0 <= 0.
  explicit RealPolynomial(std::vector<T> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  /// b_j with the zero-padding convention for j > n.
  T coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : T(0); }
  const T& leading() const { return coeffs_.front(); }
  static constexpr Regime regime() { return ScalarTraits<T>::regime; }

  /// Horner evaluation at a real point.
  T operator()(const T& x) const;

  friend bool operator==(const RealPolynomial& a, const RealPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<T> coeffs_;
};

/// Hurwitz determinants of a polynomial and their sign-adjusted form.
template <class T>
struct HurwitzReport {
  std::size_t order = 0;           // m: number of determinants examined
  std::vector<T> deltas;           // Delta_1..Delta_m
  std::vector<T> signed_deltas;    // sigma_k * Delta_k under the active sign rule
  std::vector<double> margins;     // float regime: |Delta_k| over its uncertainty; empty when exact
  std::optional<std::size_t> first_nonpositive_index;  // 1-based
};

/// p = z^n0 * deflated, with deflated(0) != 0 unless n0 == degree.
template <class T>
struct ZeroRootAnalysis {
  std::size_t n0 = 0;
  RealPolynomial<T> deflated;
  /// Float only: true when a nonzero trailing coefficient was absorbed into n0.
  bool thresholded = false;
};

/// k x k Hurwitz matrix: entry (i, j) (1-based) is b_{2j-i}, zero outside 0..n.
template <class T>
DenseMatrix<T> hurwitz_matrix(const RealPolynomial<T>& p, std::size_t k);

/// [Delta_1, ..., Delta_upto], each the determinant of hurwitz_matrix(p, k).
template <class T>
std::vector<T> hurwitz_determinants(const RealPolynomial<T>& p, std::size_t upto);

/// Multiplicity of z = 0 as a root and the deflated polynomial.
///
/// Exact: counts trailing zero coefficients. Float: the polynomial is first
/// rescaled so its roots have magnitude O(1); the trailing block of m
/// coefficients is absorbed when it is consistent with m roots of relative
/// size at most zero_coeff_tol, or lies under the supplied rounding floor.
template <class T>
ZeroRootAnalysis<T> zero_root_multiplicity(const RealPolynomial<T>& p, const ToleranceConfig& cfg);

/// Same, with an absolute rounding-noise estimate per coefficient (float
/// regime; ignored when exact). noise.size() must equal p.degree() + 1.
template <class T>
ZeroRootAnalysis<T> zero_root_multiplicity(const RealPolynomial<T>& p, const ToleranceConfig& cfg,
                                           const std::vector<double>& noise);

/// (-1)^n p(-z): coefficient k picks up (-1)^k, leading coefficient unchanged.
template <class T>
RealPolynomial<T> reflect(const RealPolynomial<T>& p);

/// max_j |b_j / b_0|^(1/j): every root lies within twice this radius.
template <class T>
double root_scale(const RealPolynomial<T>& p);

}  // namespace psdcert
