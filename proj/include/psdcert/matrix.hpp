#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "psdcert/complex.hpp"
#include "psdcert/error.hpp"

namespace psdcert {

/// Row-major dense matrix over any field-like element type.
template <class F>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  DenseMatrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::NotSquare, "ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class T>
using ComplexMatrix = DenseMatrix<Complex<T>>;

template <class F>
DenseMatrix<F> operator*(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
  DenseMatrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const F& aik = a(i, k);
      if (aik == F(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
ComplexMatrix<T> adjoint(const ComplexMatrix<T>& a) {
  ComplexMatrix<T> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j).conj();
  return r;
}

/// Square submatrix on the given (sorted) index set.
template <class F>
DenseMatrix<F> principal_submatrix(const DenseMatrix<F>& a, std::span<const std::size_t> idx) {
  DenseMatrix<F> s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = a(idx[i], idx[j]);
  return s;
}

namespace detail {

template <class F>
struct ElementTraits;

template <>
struct ElementTraits<Rational> {
  using Real = Rational;
  static double mag(const Rational& x) { return std::fabs(x.get_d()); }
};
template <>
struct ElementTraits<double> {
  using Real = double;
  static double mag(double x) { return std::fabs(x); }
};
template <class T>
struct ElementTraits<Complex<T>> {
  using Real = T;
  static double mag(const Complex<T>& z) { return magnitude(z); }
};

template <class F>
inline constexpr bool exact_element_v = is_exact_v<typename ElementTraits<F>::Real>;

// Fraction-free (Bareiss) elimination; every division is exact.
template <class F>
F bareiss_determinant(DenseMatrix<F> m) {
  const std::size_t n = m.rows();
  if (n == 0) return F(1);
  bool negate = false;
  F prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == F(0)) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == F(0)) ++p;
      if (p == n) return F(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = F(0);
    }
    prev = m(k, k);
  }
  F det = m(n - 1, n - 1);
  return negate ? F(-det) : det;
}

template <class F>
F lu_determinant(DenseMatrix<F> m) {
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = ElementTraits<F>::mag(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = ElementTraits<F>::mag(m(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) return F(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      F f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// Determinant: Bareiss elimination for exact elements, partial-pivot LU
/// for floating ones.
template <class F>
F determinant(const DenseMatrix<F>& m) {
  require(m.square(), "determinant of a non-square matrix");
  if constexpr (detail::exact_element_v<F>) {
    return detail::bareiss_determinant(m);
  } else {
    return detail::lu_determinant(m);
  }
}

/// Visits every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace psdcert
