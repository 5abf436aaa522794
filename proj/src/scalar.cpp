#include "psdcert/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "psdcert/complex.hpp"
#include "psdcert/error.hpp"
#include "psdcert/tolerance.hpp"

namespace psdcert {

std::string_view to_string(Regime r) { return r == Regime::Exact ? "exact" : "float"; }

Regime regime_from_string(std::string_view s) {
  if (s == "exact") return Regime::Exact;
  if (s == "float") return Regime::Float;
  throw Error(ErrorCode::ParseError, "unknown regime '" + std::string(s) + "'");
}

std::string ScalarTraits<double>::to_string(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// [+-]digits[.digits][(e|E)[+-]digits]
Rational parse_decimal(std::string_view s, std::string_view original) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    s = s.substr(0, e);
    bool eneg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      eneg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_number(original);
    exponent = std::stol(std::string(exp));
    if (eneg) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      bad_number(original);
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) bad_number(original);
    digits = std::string(s);
  }
  mpz_class mant(digits, 10);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent >= 0 ? Rational(mant * ten_pow) : Rational(mant, ten_pow);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num / den);
  }
  return parse_decimal(s, text);
}

double parse_real(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return parse_real(s.substr(0, slash)) / parse_real(s.substr(slash + 1));
  }
  parse_decimal(s, text);  // grammar check only
  std::string buf(s);
  return std::strtod(buf.c_str(), nullptr);
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFiniteEntry, "cannot convert non-finite value to a rational");
  return Rational(x);  // mpq_set_d is exact
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

Complex<Rational> parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  if (s.back() != 'i') return {parse_rational(s), Rational(0)};
  s.remove_suffix(1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string_view re = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im = split == std::string_view::npos ? s : s.substr(split);
  im = trim(im);
  Rational imv;
  if (im.empty() || im == "+") imv = 1;
  else if (im == "-") imv = -1;
  else imv = parse_rational(im);
  return {re.empty() ? Rational(0) : parse_rational(re), imv};
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorCode::DivergentRecursion: return "DivergentRecursion";
    case ErrorCode::ConstructionMismatch: return "ConstructionMismatch";
    case ErrorCode::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void ToleranceConfig::validate() const {
  for (double v : {hermitian_tol, zero_coeff_tol, boundary_band, oracle_eig_tol, construction_tol})
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorCode::PreconditionViolated, "tolerances must be finite and >= 0");
}

}  // namespace psdcert
