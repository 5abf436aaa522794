#include "psdcert/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace psdcert::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

// Builds a DOM in which floating-point number tokens are kept as their
// literal text (strings), so the exact value survives.
class LiteralDom {
 public:
  using number_integer_t = json::number_integer_t;
  using number_unsigned_t = json::number_unsigned_t;
  using number_float_t = json::number_float_t;
  using string_t = json::string_t;
  using binary_t = json::binary_t;

  bool null() { return put(json(nullptr)); }
  bool boolean(bool v) { return put(json(v)); }
  bool number_integer(number_integer_t v) { return put(json(v)); }
  bool number_unsigned(number_unsigned_t v) { return put(json(v)); }
  bool number_float(number_float_t, const string_t& text) { return put(json(text)); }
  bool string(string_t& v) { return put(json(v)); }
  bool binary(binary_t&) { return put(json(nullptr)); }
  bool start_object(std::size_t) {
    put(json::object());
    stack_.push_back(slot_);
    return true;
  }
  bool key(string_t& k) {
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    put(json::array());
    stack_.push_back(slot_);
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) {
    parse_fail("malformed JSON at byte " + std::to_string(pos) + ": " + ex.what());
  }

  json root;

 private:
  bool put(json v) {
    if (stack_.empty()) {
      root = std::move(v);
      slot_ = &root;
    } else if (json* parent = stack_.back(); parent->is_array()) {
      parent->push_back(std::move(v));
      slot_ = &parent->back();
    } else {
      slot_ = &((*parent)[key_] = std::move(v));
    }
    return true;
  }

  std::vector<json*> stack_;
  json* slot_ = nullptr;
  std::string key_;
};

// One scalar component as text plus whether the exact grammar accepted it.
struct Component {
  Rational exact;
  double approx = 0.0;
  bool rational = true;
};

Component component_from_text(const std::string& text) {
  Component c;
  try {
    c.exact = parse_rational(text);
    c.approx = parse_real(text);
    return c;
  } catch (const Error&) {
  }
  // Outside the exact grammar (hex floats, huge exponents): binary64 only.
  const char* begin = text.c_str();
  char* end = nullptr;
  c.approx = std::strtod(begin, &end);
  if (end == begin || *end != '\0') parse_fail("cannot parse number '" + text + "'");
  c.rational = false;
  return c;
}

Component component_from_json(const json& v) {
  if (v.is_number_integer()) return component_from_text(v.dump());
  if (v.is_string()) return component_from_text(v.get<std::string>());
  parse_fail("expected a number, got " + v.dump());
}

struct Entry {
  Component re, im;
};

Entry entry_from_json(const json& v) {
  if (v.is_array()) {
    if (v.size() != 2) parse_fail("complex entry must be [re, im], got " + v.dump());
    return {component_from_json(v[0]), component_from_json(v[1])};
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (!s.empty() && s.find('i') != std::string::npos && s.find("inf") == std::string::npos) {
      const Complex<Rational> z = parse_complex(s);
      Entry e;
      e.re.exact = z.re;
      e.im.exact = z.im;
      e.re.approx = z.re.get_d();
      e.im.approx = z.im.get_d();
      return e;
    }
  }
  return {component_from_json(v), component_from_text("0")};
}

MatrixFile assemble(InputFormat fmt, const std::vector<std::vector<Entry>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::NotSquare, "matrix has no rows");
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                            " entries, expected " + std::to_string(n));
  MatrixFile f;
  f.format = fmt;
  f.n = n;
  f.approx = ComplexMatrix<double>(n, n);
  ComplexMatrix<Rational> exact(n, n);
  bool all_rational = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Entry& e = rows[i][j];
      f.approx(i, j) = Complex<double>(e.re.approx, e.im.approx);
      exact(i, j) = Complex<Rational>(e.re.exact, e.im.exact);
      all_rational = all_rational && e.re.rational && e.im.rational;
    }
  if (all_rational) f.exact = std::move(exact);
  return f;
}

MatrixFile parse_json(std::string_view text) {
  LiteralDom dom;
  json::sax_parse(text.begin(), text.end(), &dom);
  const json& root = dom.root;
  const json* entries = &root;
  std::optional<std::size_t> declared_n;
  std::optional<Regime> regime;
  if (root.is_object()) {
    if (!root.contains("entries")) parse_fail("JSON object has no \"entries\"");
    entries = &root.at("entries");
    if (root.contains("n")) {
      if (!root.at("n").is_number_integer() || root.at("n").get<long long>() < 0)
        parse_fail("\"n\" must be a nonnegative integer");
      declared_n = root.at("n").get<std::size_t>();
    }
    if (root.contains("regime")) {
      if (!root.at("regime").is_string()) parse_fail("\"regime\" must be \"exact\" or \"float\"");
      try {
        regime = regime_from_string(root.at("regime").get<std::string>());
      } catch (const Error& e) {
        parse_fail(e.what());
      }
    }
  }
  if (!entries->is_array()) parse_fail("\"entries\" must be an array of rows");
  std::vector<std::vector<Entry>> rows;
  for (const json& row : *entries) {
    if (!row.is_array()) parse_fail("each row must be an array");
    std::vector<Entry> r;
    for (const json& v : row) r.push_back(entry_from_json(v));
    rows.push_back(std::move(r));
  }
  MatrixFile f = assemble(InputFormat::Json, rows);
  if (declared_n && *declared_n != f.n)
    throw Error(ErrorCode::NotSquare,
                "\"n\" is " + std::to_string(*declared_n) + " but entries have " + std::to_string(f.n) + " rows");
  f.declared_regime = regime;
  return f;
}

MatrixFile parse_csv(std::string_view text) {
  std::vector<std::vector<Entry>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<Entry> r;
    for (const std::string& tok : split_coefficients(line)) {
      if (tok.find('i') != std::string::npos && tok.find("inf") == std::string::npos)
        parse_fail("CSV accepts real entries only, got '" + tok + "'");
      r.push_back({component_from_text(tok), component_from_text("0")});
    }
    rows.push_back(std::move(r));
  }
  return assemble(InputFormat::Csv, rows);
}

template <class T>
json scalars_json(const std::vector<T>& xs) {
  json out = json::array();
  for (const T& x : xs) out.push_back(scalar_json(x));
  return out;
}

json optional_index(const std::optional<std::size_t>& k) { return k ? json(*k) : json(nullptr); }

}  // namespace

InputFormat format_from_string(std::string_view s) {
  if (s == "auto") return InputFormat::Auto;
  if (s == "json") return InputFormat::Json;
  if (s == "csv") return InputFormat::Csv;
  parse_fail("unknown input format '" + std::string(s) + "'");
}

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MatrixFile parse_matrix(std::string_view text, InputFormat format) {
  if (format == InputFormat::Auto) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) parse_fail("empty input");
    format = (text[first] == '{' || text[first] == '[') ? InputFormat::Json : InputFormat::Csv;
  }
  return format == InputFormat::Json ? parse_json(text) : parse_csv(text);
}

Regime resolve_regime(const MatrixFile& file, std::optional<Regime> flag) {
  Regime r = flag ? *flag : file.declared_regime ? *file.declared_regime
                          : file.all_rational()  ? Regime::Exact
                                                 : Regime::Float;
  if (r == Regime::Exact && !file.all_rational())
    parse_fail("exact regime requested but some entries are not rational");
  return r;
}

std::vector<std::string> split_coefficients(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

RealPolynomial<Rational> parse_polynomial_exact(const std::vector<std::string>& tokens) {
  std::vector<Rational> c;
  for (const std::string& t : tokens) c.push_back(parse_rational(t));
  return RealPolynomial<Rational>(std::move(c));
}

RealPolynomial<double> parse_polynomial_float(const std::vector<std::string>& tokens) {
  std::vector<double> c;
  for (const std::string& t : tokens) c.push_back(component_from_text(t).approx);
  return RealPolynomial<double>(std::move(c));
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xF]);
  }
  return out;
}

json scalar_json(const Rational& x) { return x.get_str(); }
json scalar_json(double x) { return std::isfinite(x) ? json(x) : json(ScalarTraits<double>::to_string(x)); }

json tolerances_json(const ToleranceConfig& cfg) {
  return {{"hermitian_tol", cfg.hermitian_tol},
          {"zero_coeff_tol", cfg.zero_coeff_tol},
          {"boundary_band", cfg.boundary_band},
          {"oracle_eig_tol", cfg.oracle_eig_tol},
          {"construction_tol", cfg.construction_tol}};
}

template <class T>
json certificate_json(const PositivityCertificate<T>& c) {
  json h = {{"order", c.hurwitz.order},
            {"deltas", scalars_json(c.hurwitz.deltas)},
            {"signed_deltas", scalars_json(c.hurwitz.signed_deltas)},
            {"first_nonpositive_index", optional_index(c.hurwitz.first_nonpositive_index)}};
  if (!c.hurwitz.margins.empty()) h["margins"] = c.hurwitz.margins;
  return {{"verdict", to_string(c.verdict)},
          {"n", c.n},
          {"n0", c.n0},
          {"charpoly", scalars_json(c.charpoly.coeffs())},
          {"hurwitz", h},
          {"regime", to_string(c.regime)},
          {"tolerances", tolerances_json(c.tolerances)},
          {"sign_rule", to_string(c.sign_rule)},
          {"route", to_string(c.route)},
          {"routes_cross_checked", c.routes_cross_checked},
          {"construction_discrepancy", c.construction_discrepancy},
          {"witness", optional_index(c.witness)},
          {"notes", c.notes}};
}

json spectrum_json(const oracle::Spectrum& s) {
  return {{"eigenvalues", s.eigenvalues}, {"residual", s.residual}, {"sweeps", s.sweeps}};
}

template <class T>
std::string format_coefficients(const RealPolynomial<T>& p) {
  std::string out;
  for (const T& c : p.coeffs()) {
    if (!out.empty()) out.push_back(' ');
    out += ScalarTraits<T>::to_string(c);
  }
  return out;
}

template json certificate_json(const PositivityCertificate<Rational>&);
template json certificate_json(const PositivityCertificate<double>&);
template std::string format_coefficients(const RealPolynomial<Rational>&);
template std::string format_coefficients(const RealPolynomial<double>&);

}  // namespace psdcert::io
