#pragma once

// Test-side reference computations. None of these call into the library's
// determinant, charpoly or Hurwitz code, so agreement is meaningful.

#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "psdcert/complex.hpp"
#include "psdcert/matrix.hpp"
#include "psdcert/scalar.hpp"

namespace ref {

using psdcert::Complex;
using psdcert::ComplexMatrix;
using psdcert::DenseMatrix;
using psdcert::Rational;

// Plain Gaussian elimination over a field, first nonzero pivot.
template <class F>
F gauss_det(std::vector<std::vector<F>> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == F(0)) ++piv;
    if (piv == n) return F(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = F(0) - det;
    }
    det = det * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const F f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

// Permutation expansion; fine for n <= 5.
template <class F>
F leibniz_det(const std::vector<std::vector<F>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  F total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    F term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    total = inversions % 2 == 0 ? F(total + term) : F(total - term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class T>
std::vector<std::vector<Complex<T>>> rows_of(const ComplexMatrix<T>& a) {
  std::vector<std::vector<Complex<T>>> out(a.rows(), std::vector<Complex<T>>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  return out;
}

// Coefficients of prod (z - r_i), leading first.
template <class T>
std::vector<T> poly_from_roots(const std::vector<T>& roots) {
  std::vector<T> c{T(1)};
  for (const T& r : roots) {
    std::vector<T> next(c.size() + 1, T(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

// det(zI - A) by exact interpolation through z = 0..n (Newton divided
// differences), with determinants by Gaussian elimination.
inline std::vector<Rational> charpoly_by_interpolation(const ComplexMatrix<Rational>& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t x = 0; x <= n; ++x) {
    auto m = rows_of(a);
    for (auto& row : m)
      for (auto& e : row) e = Complex<Rational>(Rational(0) - e.re, Rational(0) - e.im);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += Complex<Rational>(Rational(static_cast<long>(x)));
    xs.push_back(Rational(static_cast<long>(x)));
    ys.push_back(gauss_det(m).re);
  }
  // Divided differences, then expand the Newton form into monomials.
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> asc{dd[n]};  // ascending powers
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rational> next(asc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < asc.size(); ++i) {
      next[i + 1] += asc[i];
      next[i] -= xs[k] * asc[i];
    }
    next[0] += dd[k];
    asc = std::move(next);
  }
  while (asc.size() > n + 1) asc.pop_back();
  return {asc.rbegin(), asc.rend()};
}

// Hurwitz determinant straight from the entry rule, by Gaussian elimination.
template <class T>
T hurwitz_det(const std::vector<T>& b, std::size_t k) {
  const long n = static_cast<long>(b.size()) - 1;
  std::vector<std::vector<T>> m(k, std::vector<T>(k, T(0)));
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j) {
      const long idx = 2 * static_cast<long>(j) - static_cast<long>(i);
      if (idx >= 0 && idx <= n) m[i - 1][j - 1] = b[static_cast<std::size_t>(idx)];
    }
  return gauss_det(m);
}

inline ComplexMatrix<Rational> real_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t n = rows.size();
  ComplexMatrix<Rational> m(n, rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Complex<Rational>(Rational(v));
    ++i;
  }
  return m;
}

inline ComplexMatrix<double> to_float(const ComplexMatrix<Rational>& m) {
  ComplexMatrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex<double>(m(i, j).re.get_d(), m(i, j).im.get_d());
  return out;
}

inline Rational small_rational(std::mt19937_64& rng, int num_bound = 5, int den_bound = 4) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace ref
