#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "psdcert/criteria.hpp"
#include "psdcert/matrix.hpp"
#include "psdcert/oracle.hpp"

namespace psdcert::io {

inline constexpr std::string_view kToolName = "psdcert";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class InputFormat { Auto, Json, Csv };
InputFormat format_from_string(std::string_view s);

/// A parsed matrix file. Every entry is kept in binary64; when all of them
/// parse as rationals the exact values are kept too.
struct MatrixFile {
  InputFormat format = InputFormat::Json;
  std::size_t n = 0;
  std::optional<ComplexMatrix<Rational>> exact;
  ComplexMatrix<double> approx;
  std::optional<Regime> declared_regime;  // the JSON "regime" field

  bool all_rational() const { return exact.has_value(); }
};

/// Reads a whole file, or standard input when path is "-".
std::string read_source(const std::string& path);

/// JSON: {"n": int, "entries": [[e, ...], ...], "regime": "exact"|"float"},
/// or a bare array of rows. An entry is a number, a [re, im] pair, or a
/// string such as "3/4", "1.5-2i". Number tokens are read from their
/// literal text, so 0.1 is exactly 1/10.
/// CSV: one row per line, comma or whitespace separated, real entries only;
/// blank lines and lines starting with '#' are skipped.
/// Throws Error(ParseError) or Error(NotSquare).
MatrixFile parse_matrix(std::string_view text, InputFormat format = InputFormat::Auto);

/// Precedence: explicit flag, then the file's "regime" field, then exact
/// when every entry is rational and float otherwise.
Regime resolve_regime(const MatrixFile& file, std::optional<Regime> flag);

/// Coefficient tokens separated by whitespace or commas, leading first.
std::vector<std::string> split_coefficients(std::string_view text);
RealPolynomial<Rational> parse_polynomial_exact(const std::vector<std::string>& tokens);
RealPolynomial<double> parse_polynomial_float(const std::vector<std::string>& tokens);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Rationals serialize as "p/q" strings, doubles as JSON numbers.
nlohmann::json scalar_json(const Rational& x);
nlohmann::json scalar_json(double x);

nlohmann::json tolerances_json(const ToleranceConfig& cfg);

template <class T>
nlohmann::json certificate_json(const PositivityCertificate<T>& cert);

nlohmann::json spectrum_json(const oracle::Spectrum& s);

/// Space-separated coefficients, e.g. "1 -6 11 -6".
template <class T>
std::string format_coefficients(const RealPolynomial<T>& p);

}  // namespace psdcert::io
