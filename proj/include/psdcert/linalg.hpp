#pragma once

#include <cstddef>

#include "psdcert/matrix.hpp"
#include "psdcert/poly.hpp"
#include "psdcert/tolerance.hpp"

namespace psdcert {

/// A validated self-adjoint matrix. In the float regime the entries are the
/// symmetrized (A + A*)/2, so downstream code always sees an exactly
/// Hermitian object.
template <class T>
class HermitianMatrix {
 public:
  /// Checks conjugate symmetry. Exact inputs must be identically Hermitian
  /// and are stored unchanged; float inputs within hermitian_tol (relative to
  /// the largest entry magnitude) are symmetrized.
  static HermitianMatrix validate(const ComplexMatrix<T>& raw, const ToleranceConfig& cfg);

  std::size_t dim() const { return entries_.rows(); }
  const Complex<T>& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const ComplexMatrix<T>& entries() const { return entries_; }
  /// Largest |raw_ij - conj(raw_ji)| seen at validation.
  double max_asymmetry() const { return max_asymmetry_; }
  static constexpr Regime regime() { return ScalarTraits<T>::regime; }

 private:
  HermitianMatrix(ComplexMatrix<T> entries, double asym) : entries_(std::move(entries)), max_asymmetry_(asym) {}

  ComplexMatrix<T> entries_;
  double max_asymmetry_ = 0.0;
};

template <class T>
HermitianMatrix<T> validate_hermitian(const ComplexMatrix<T>& raw, const ToleranceConfig& cfg = {}) {
  return HermitianMatrix<T>::validate(raw, cfg);
}

/// Real diagonal matrix, mostly for tests and examples.
template <class T>
HermitianMatrix<T> diagonal_matrix(const std::vector<T>& diag);

/// tr(A^k) for 1 <= k <= n. The imaginary residue is checked and dropped.
template <class T>
T trace_power(const HermitianMatrix<T>& a, std::size_t k, const ToleranceConfig& cfg = {});

/// Sum of all k x k principal minors (the elementary symmetric function e_k
/// of the spectrum), 1 <= k <= n.
template <class T>
T principal_minor_sum(const HermitianMatrix<T>& a, std::size_t k, const ToleranceConfig& cfg = {});

/// det(zI - A) via Newton's identities on the power traces:
/// b_0 = 1, b_k = -(1/k) sum_{j=1..k} b_{k-j} tr(A^j).
template <class T>
RealPolynomial<T> charpoly_traces(const HermitianMatrix<T>& a, const ToleranceConfig& cfg = {});

/// det(zI - A) via principal minors: b_k = (-1)^k principal_minor_sum(A, k).
/// Enumerates every subset, so it is meant for small n.
template <class T>
RealPolynomial<T> charpoly_minors(const HermitianMatrix<T>& a, const ToleranceConfig& cfg = {});

template <class T>
T trace(const HermitianMatrix<T>& a);

/// Real determinant of a Hermitian matrix.
template <class T>
T determinant(const HermitianMatrix<T>& a, const ToleranceConfig& cfg = {});

/// Frobenius norm as a double, in either regime.
template <class T>
double frobenius_norm(const HermitianMatrix<T>& a);

/// Natural magnitude of b_k for an n x n matrix of Frobenius norm fro:
/// C(n, k) fro^k bounds |e_k| of the spectrum.
double coefficient_scale(std::size_t n, std::size_t k, double fro);

}  // namespace psdcert
