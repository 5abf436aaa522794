#pragma once

#include <cmath>
#include <string>

#include "psdcert/scalar.hpp"

namespace psdcert {

/// Complex number over a real field T. std::complex is only specified for
/// floating-point types, so the exact regime needs its own.
template <class T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Complex conj() const { return {re, T(-im)}; }
  T norm2() const { return T(re * re + im * im); }
  bool is_real() const { return im == 0; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    if constexpr (is_exact_v<T>) {
      T d = o.norm2();
      T r = (re * o.re + im * o.im) / d;
      T i = (im * o.re - re * o.im) / d;
      re = std::move(r);
      im = std::move(i);
    } else {
      // Smith's algorithm
      if (std::fabs(o.re) >= std::fabs(o.im)) {
        double t = o.im / o.re, d = o.re + o.im * t;
        double r = (re + im * t) / d, i = (im - re * t) / d;
        re = r;
        im = i;
      } else {
        double t = o.re / o.im, d = o.re * t + o.im;
        double r = (re * t + im) / d, i = (im * t - re) / d;
        re = r;
        im = i;
      }
    }
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {T(-a.re), T(-a.im)}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

/// Magnitude as a double; exact values are converted first.
template <class T>
double magnitude(const Complex<T>& z) {
  return std::hypot(ScalarTraits<T>::to_double(z.re), ScalarTraits<T>::to_double(z.im));
}

template <class T>
std::string to_string(const Complex<T>& z) {
  using Tr = ScalarTraits<T>;
  if (z.im == 0) return Tr::to_string(z.re);
  std::string s = z.re == 0 ? std::string{} : Tr::to_string(z.re);
  std::string im = Tr::to_string(z.im);
  if (!s.empty() && im.front() != '-') s += '+';
  return s + im + "i";
}

/// Parses "a", "bi", "a+bi", "a-bi" where a and b follow parse_rational.
Complex<Rational> parse_complex(std::string_view text);

}  // namespace psdcert
