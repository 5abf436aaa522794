#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace psdcert {

using Rational = mpq_class;

/// Arithmetic regime a computation runs in. Exact uses GMP rationals and
/// compares identically; Float uses binary64 with relative tolerances.
enum class Regime { Exact, Float };

std::string_view to_string(Regime r);
Regime regime_from_string(std::string_view s);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Regime regime = Regime::Exact;
  static Rational abs(const Rational& x) { return ::abs(x); }
  static bool is_finite(const Rational&) { return true; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Regime regime = Regime::Float;
  static double abs(double x) { return std::fabs(x); }
  static bool is_finite(double x) { return std::isfinite(x); }
  static double to_double(double x) { return x; }
  static std::string to_string(double x);
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

/// Sign of x as -1, 0 or +1.
template <class T>
int sign_of(const T& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

/// Parses an integer, "p/q" fraction, or decimal literal (optional exponent)
/// exactly. Throws Error(ParseError) on malformed text.
Rational parse_rational(std::string_view text);

/// Parses the same grammar as parse_rational to the nearest binary64.
double parse_real(std::string_view text);

/// Exact rational value of a finite double.
Rational rational_from_double(double x);

/// Binomial coefficient as a double; n is at most a few dozen here.
double binomial(int n, int k);

}  // namespace psdcert
