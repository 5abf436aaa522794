#include "psdcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace psdcert {

namespace {

// Floor for the imaginary-residue check so a zero tolerance does not trip
// on ordinary rounding.
double residue_tolerance(const ToleranceConfig& cfg, std::size_t n) {
  return std::max(cfg.zero_coeff_tol, 64.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon());
}

template <class T>
T real_part_checked(const Complex<T>& z, double scale, const ToleranceConfig& cfg, std::size_t n, const char* what) {
  if constexpr (is_exact_v<T>) {
    if (z.im != 0) throw Error(ErrorCode::ImaginaryResidue, what);
  } else {
    if (std::fabs(z.im) > residue_tolerance(cfg, n) * scale) throw Error(ErrorCode::ImaginaryResidue, what);
  }
  return z.re;
}

// tr(A^j) for j = 1..n as complex values.
template <class T>
std::vector<Complex<T>> power_traces(const HermitianMatrix<T>& a, std::size_t upto) {
  std::vector<Complex<T>> out;
  out.reserve(upto);
  ComplexMatrix<T> power = a.entries();
  for (std::size_t j = 1; j <= upto; ++j) {
    if (j > 1) power = power * a.entries();
    Complex<T> t;
    for (std::size_t i = 0; i < a.dim(); ++i) t += power(i, i);
    out.push_back(t);
  }
  return out;
}

template <class T>
Complex<T> minor_sum_complex(const HermitianMatrix<T>& a, std::size_t k) {
  Complex<T> sum;
  for_each_subset(a.dim(), k, [&](std::span<const std::size_t> idx) {
    sum += determinant(principal_submatrix(a.entries(), idx));
  });
  return sum;
}

}  // namespace

double coefficient_scale(std::size_t n, std::size_t k, double fro) {
  return binomial(static_cast<int>(n), static_cast<int>(k)) * std::pow(fro, static_cast<double>(k));
}

template <class T>
HermitianMatrix<T> HermitianMatrix<T>::validate(const ComplexMatrix<T>& raw, const ToleranceConfig& cfg) {
  if (!raw.square()) throw Error(ErrorCode::NotSquare, "matrix is not square");
  const std::size_t n = raw.rows();
  if (n == 0) throw Error(ErrorCode::NotSquare, "matrix is empty");
  double max_entry = 0.0, asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& z = raw(i, j);
      if (!ScalarTraits<T>::is_finite(z.re) || !ScalarTraits<T>::is_finite(z.im))
        throw Error(ErrorCode::NonFiniteEntry, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      max_entry = std::max(max_entry, magnitude(z));
      asym = std::max(asym, magnitude(Complex<T>(raw(i, j) - raw(j, i).conj())));
    }
  if constexpr (is_exact_v<T>) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (!(raw(i, j) == raw(j, i).conj()))
          throw Error(ErrorCode::NotHermitian, "a(" + std::to_string(i) + "," + std::to_string(j) +
                                                   ") != conj(a(" + std::to_string(j) + "," + std::to_string(i) + "))");
    return HermitianMatrix(raw, asym);
  } else {
    const ToleranceConfig c = effective<T>(cfg);
    if (asym > c.hermitian_tol * max_entry)
      throw Error(ErrorCode::NotHermitian, "max asymmetry " + ScalarTraits<double>::to_string(asym) +
                                               " exceeds tolerance " +
                                               ScalarTraits<double>::to_string(c.hermitian_tol * max_entry));
    ComplexMatrix<T> sym(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      sym(i, i) = Complex<T>(raw(i, i).re, 0.0);
      for (std::size_t j = i + 1; j < n; ++j) {
        Complex<T> avg((raw(i, j).re + raw(j, i).re) / 2, (raw(i, j).im - raw(j, i).im) / 2);
        sym(i, j) = avg;
        sym(j, i) = avg.conj();
      }
    }
    return HermitianMatrix(std::move(sym), asym);
  }
}

template <class T>
HermitianMatrix<T> diagonal_matrix(const std::vector<T>& diag) {
  ComplexMatrix<T> m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = Complex<T>(diag[i]);
  return HermitianMatrix<T>::validate(m, {});
}

template <class T>
T trace_power(const HermitianMatrix<T>& a, std::size_t k, const ToleranceConfig& cfg) {
  require(k >= 1 && k <= a.dim(), "trace_power: need 1 <= k <= n");
  ComplexMatrix<T> power = a.entries();
  for (std::size_t j = 1; j < k; ++j) power = power * a.entries();
  Complex<T> t;
  for (std::size_t i = 0; i < a.dim(); ++i) t += power(i, i);
  const double scale = static_cast<double>(a.dim()) * std::pow(frobenius_norm(a), static_cast<double>(k));
  return real_part_checked(t, scale, effective<T>(cfg), a.dim(), "tr(A^k) has an imaginary part");
}

template <class T>
T principal_minor_sum(const HermitianMatrix<T>& a, std::size_t k, const ToleranceConfig& cfg) {
  require(k >= 1 && k <= a.dim(), "principal_minor_sum: need 1 <= k <= n");
  const double scale = coefficient_scale(a.dim(), k, frobenius_norm(a));
  return real_part_checked(minor_sum_complex(a, k), scale, effective<T>(cfg), a.dim(),
                           "principal minor sum has an imaginary part");
}

template <class T>
RealPolynomial<T> charpoly_traces(const HermitianMatrix<T>& a, const ToleranceConfig& cfg) {
  const std::size_t n = a.dim();
  const ToleranceConfig c = effective<T>(cfg);
  const double fro = frobenius_norm(a);
  std::vector<Complex<T>> tr = power_traces(a, n);
  std::vector<T> t(n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    double scale = static_cast<double>(n) * std::pow(fro, static_cast<double>(j));
    t[j] = real_part_checked(tr[j - 1], scale, c, n, "tr(A^k) has an imaginary part");
  }
  std::vector<T> b(n + 1);
  b[0] = T(1);
  for (std::size_t k = 1; k <= n; ++k) {
    T acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += b[k - j] * t[j];
    b[k] = -acc / T(static_cast<long>(k));
    if (!ScalarTraits<T>::is_finite(b[k]))
      throw Error(ErrorCode::DivergentRecursion, "coefficient b_" + std::to_string(k) + " is not finite");
  }
  return RealPolynomial<T>(std::move(b));
}

template <class T>
RealPolynomial<T> charpoly_minors(const HermitianMatrix<T>& a, const ToleranceConfig& cfg) {
  const std::size_t n = a.dim();
  std::vector<T> b(n + 1);
  b[0] = T(1);
  for (std::size_t k = 1; k <= n; ++k) {
    T s = principal_minor_sum(a, k, cfg);
    b[k] = k % 2 == 0 ? s : T(-s);
    if (!ScalarTraits<T>::is_finite(b[k]))
      throw Error(ErrorCode::DivergentRecursion, "coefficient b_" + std::to_string(k) + " is not finite");
  }
  return RealPolynomial<T>(std::move(b));
}

template <class T>
T trace(const HermitianMatrix<T>& a) {
  T t(0);
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i).re;
  return t;
}

template <class T>
T determinant(const HermitianMatrix<T>& a, const ToleranceConfig& cfg) {
  const double scale = std::pow(frobenius_norm(a), static_cast<double>(a.dim()));
  return real_part_checked(determinant(a.entries()), scale, effective<T>(cfg), a.dim(),
                           "determinant has an imaginary part");
}

template <class T>
double frobenius_norm(const HermitianMatrix<T>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      double m = magnitude(a(i, j));
      s += m * m;
    }
  return std::sqrt(s);
}

#define PSDCERT_INSTANTIATE(T)                                                                          \
  template class HermitianMatrix<T>;                                                                    \
  template HermitianMatrix<T> diagonal_matrix(const std::vector<T>&);                                   \
  template T trace_power(const HermitianMatrix<T>&, std::size_t, const ToleranceConfig&);               \
  template T principal_minor_sum(const HermitianMatrix<T>&, std::size_t, const ToleranceConfig&);       \
  template RealPolynomial<T> charpoly_traces(const HermitianMatrix<T>&, const ToleranceConfig&);        \
  template RealPolynomial<T> charpoly_minors(const HermitianMatrix<T>&, const ToleranceConfig&);        \
  template T trace(const HermitianMatrix<T>&);                                                          \
  template T determinant(const HermitianMatrix<T>&, const ToleranceConfig&);                            \
  template double frobenius_norm(const HermitianMatrix<T>&);

PSDCERT_INSTANTIATE(Rational)
PSDCERT_INSTANTIATE(double)

}  // namespace psdcert
