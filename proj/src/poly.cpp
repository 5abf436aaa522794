#include "psdcert/poly.hpp"

#include <algorithm>
#include <cmath>

namespace psdcert {

template <class T>
RealPolynomial<T>::RealPolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidPolynomial, "no coefficients");
  for (const T& c : coeffs_)
    if (!ScalarTraits<T>::is_finite(c)) throw Error(ErrorCode::InvalidPolynomial, "non-finite coefficient");
  if (!(coeffs_.front() > 0)) throw Error(ErrorCode::InvalidPolynomial, "leading coefficient must be positive");
}

template <class T>
T RealPolynomial<T>::operator()(const T& x) const {
  T acc(0);
  for (const T& c : coeffs_) acc = acc * x + c;
  return acc;
}

template <class T>
DenseMatrix<T> hurwitz_matrix(const RealPolynomial<T>& p, std::size_t k) {
  require(k >= 1 && k <= p.degree(), "hurwitz_matrix: need 1 <= k <= degree");
  DenseMatrix<T> m(k, k);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j) {
      if (2 * j >= i) m(i - 1, j - 1) = p.coeff(2 * j - i);
    }
  return m;
}

template <class T>
std::vector<T> hurwitz_determinants(const RealPolynomial<T>& p, std::size_t upto) {
  require(upto >= 1 && upto <= p.degree(), "hurwitz_determinants: need 1 <= upto <= degree");
  std::vector<T> out;
  out.reserve(upto);
  for (std::size_t k = 1; k <= upto; ++k) out.push_back(determinant(hurwitz_matrix(p, k)));
  return out;
}

template <class T>
double root_scale(const RealPolynomial<T>& p) {
  using Tr = ScalarTraits<T>;
  const double b0 = Tr::to_double(p.leading());
  double rho = 0.0;
  for (std::size_t j = 1; j <= p.degree(); ++j) {
    double r = std::fabs(Tr::to_double(p.coeffs()[j]) / b0);
    if (r > 0.0) rho = std::max(rho, std::pow(r, 1.0 / static_cast<double>(j)));
  }
  return rho;
}

namespace {

template <class T>
RealPolynomial<T> prefix(const RealPolynomial<T>& p, std::size_t len) {
  return RealPolynomial<T>(std::vector<T>(p.coeffs().begin(), p.coeffs().begin() + static_cast<std::ptrdiff_t>(len)));
}

}  // namespace

template <class T>
ZeroRootAnalysis<T> zero_root_multiplicity(const RealPolynomial<T>& p, const ToleranceConfig& cfg,
                                           const std::vector<double>& noise) {
  const std::size_t n = p.degree();
  if constexpr (is_exact_v<T>) {
    std::size_t n0 = 0;
    while (n0 < n && p.coeffs()[n - n0] == 0) ++n0;
    return {n0, prefix(p, n + 1 - n0), false};
  } else {
    const ToleranceConfig c = effective<T>(cfg);
    require(noise.empty() || noise.size() == n + 1, "zero_root_multiplicity: noise size mismatch");
    double rho = root_scale(p);
    if (rho == 0.0) return {n, prefix(p, 1), false};
    // Normalized coefficients: roots of sum c_j z^(n-j) are the roots of p over rho.
    std::vector<double> cn(n + 1), nz(n + 1, 0.0);
    double pw = p.leading();
    for (std::size_t j = 0; j <= n; ++j) {
      cn[j] = p.coeffs()[j] / pw;
      if (!noise.empty()) nz[j] = noise[j] / pw;
      pw *= rho;
    }
    // m small roots of size <= delta on top of a cofactor q give
    // |c_{n-m+t}| ~ C(m, t) delta^t |c_{n-m}|; the factor 2 absorbs cross terms.
    const double delta = 2.0 * c.zero_coeff_tol;
    for (std::size_t m = n; m >= 1; --m) {
      const double base = std::fabs(cn[n - m]);
      if (base == 0.0 || base <= nz[n - m]) continue;
      bool fits = true;
      double dt = 1.0;
      for (std::size_t t = 1; t <= m && fits; ++t) {
        dt *= delta;
        double allowed = std::max(binomial(static_cast<int>(m), static_cast<int>(t)) * dt * base, nz[n - m + t]);
        fits = std::fabs(cn[n - m + t]) <= allowed;
      }
      if (fits) {
        bool thresholded = false;
        for (std::size_t j = n - m + 1; j <= n; ++j) thresholded = thresholded || p.coeffs()[j] != 0.0;
        return {m, prefix(p, n + 1 - m), thresholded};
      }
    }
    return {0, p, false};
  }
}

template <class T>
ZeroRootAnalysis<T> zero_root_multiplicity(const RealPolynomial<T>& p, const ToleranceConfig& cfg) {
  return zero_root_multiplicity(p, cfg, {});
}

template <class T>
RealPolynomial<T> reflect(const RealPolynomial<T>& p) {
  std::vector<T> c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return RealPolynomial<T>(std::move(c));
}

#define PSDCERT_INSTANTIATE(T)                                                                                   \
  template class RealPolynomial<T>;                                                                              \
  template DenseMatrix<T> hurwitz_matrix(const RealPolynomial<T>&, std::size_t);                                 \
  template std::vector<T> hurwitz_determinants(const RealPolynomial<T>&, std::size_t);                           \
  template double root_scale(const RealPolynomial<T>&);                                                          \
  template ZeroRootAnalysis<T> zero_root_multiplicity(const RealPolynomial<T>&, const ToleranceConfig&,          \
                                                      const std::vector<double>&);                               \
  template ZeroRootAnalysis<T> zero_root_multiplicity(const RealPolynomial<T>&, const ToleranceConfig&);         \
  template RealPolynomial<T> reflect(const RealPolynomial<T>&);

PSDCERT_INSTANTIATE(Rational)
PSDCERT_INSTANTIATE(double)

}  // namespace psdcert
