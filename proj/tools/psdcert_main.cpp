// psdcert: command-line front end for the Hurwitz positivity certificate.
//
// Exit codes: 0 Positive / Satisfied, 1 NotPositive / Violated, 2 Boundary,
// 3 input or validation error.

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "psdcert/bench.hpp"
#include "psdcert/criteria.hpp"
#include "psdcert/io.hpp"
#include "psdcert/oracle.hpp"

using namespace psdcert;
using nlohmann::json;

namespace {

constexpr int kExitInput = 3;

struct Common {
  std::string regime = "auto";
  std::string format = "json";
  std::string input_format = "auto";
  ToleranceConfig tol;
};

void add_tolerances(CLI::App* cmd, ToleranceConfig& tol) {
  cmd->add_option("--tol-hermitian", tol.hermitian_tol, "Relative Hermitian asymmetry tolerance")->capture_default_str();
  cmd->add_option("--tol-zero", tol.zero_coeff_tol, "Relative radius for a root to count as zero")->capture_default_str();
  cmd->add_option("--tol-band", tol.boundary_band, "Relative boundary band for Hurwitz determinants")
      ->capture_default_str();
  cmd->add_option("--tol-eig", tol.oracle_eig_tol, "Jacobi stopping tolerance")->capture_default_str();
  cmd->add_option("--tol-construction", tol.construction_tol, "Allowed traces/minors discrepancy")
      ->capture_default_str();
}

void add_regime(CLI::App* cmd, Common& c) {
  cmd->add_option("--regime", c.regime, "Arithmetic regime")
      ->check(CLI::IsMember({"auto", "exact", "float"}))
      ->capture_default_str();
}

void add_format(CLI::App* cmd, Common& c, const std::string& def) {
  c.format = def;
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

std::optional<Regime> regime_flag(const std::string& s) {
  if (s == "auto") return std::nullopt;
  return regime_from_string(s);
}

int exit_code(Positivity v) {
  switch (v) {
    case Positivity::Positive: return 0;
    case Positivity::NotPositive: return 1;
    case Positivity::Boundary: return 2;
  }
  return kExitInput;
}

int exit_code(VerdictKind v) {
  switch (v) {
    case VerdictKind::Satisfied: return 0;
    case VerdictKind::Violated: return 1;
    case VerdictKind::Boundary: return 2;
  }
  return kExitInput;
}

std::string fmt(const Rational& x) { return x.get_str(); }
std::string fmt(double x) { return ScalarTraits<double>::to_string(x); }

struct LoadedMatrix {
  std::string raw;
  io::MatrixFile file;
  Regime regime;
};

LoadedMatrix load_matrix(const std::string& path, const Common& c) {
  LoadedMatrix m;
  m.raw = io::read_source(path);
  m.file = io::parse_matrix(m.raw, io::format_from_string(c.input_format));
  m.regime = io::resolve_regime(m.file, regime_flag(c.regime));
  return m;
}

// Calls fn(HermitianMatrix<T>) in the resolved regime.
template <class Fn>
int with_matrix(const LoadedMatrix& m, const ToleranceConfig& tol, Fn&& fn) {
  if (m.regime == Regime::Exact) return fn(validate_hermitian(*m.file.exact, tol));
  return fn(validate_hermitian(m.file.approx, tol));
}

template <class T>
void print_hurwitz_table(std::ostream& out, const HurwitzReport<T>& h, bool show_signed) {
  for (std::size_t k = 0; k < h.deltas.size(); ++k) {
    out << "  Delta_" << (k + 1) << " = " << fmt(h.deltas[k]);
    if (show_signed) out << "    sigma*Delta = " << fmt(h.signed_deltas[k]);
    if (k < h.margins.size()) out << "    margin = " << fmt(h.margins[k]);
    out << "\n";
  }
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  Common c;
  std::string path;
  bool oracle = false;
  std::size_t minors_max_dim = 12;
  double oracle_band = 1e-7;
};

template <class T>
json oracle_report(const HermitianMatrix<T>& a, const PositivityCertificate<T>& cert, const CheckArgs& args) {
  HermitianMatrix<double> ad = [&] {
    if constexpr (is_exact_v<T>) {
      ComplexMatrix<double> d(a.dim(), a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) d(i, j) = Complex<double>(a(i, j).re.get_d(), a(i, j).im.get_d());
      return validate_hermitian(d, args.c.tol);
    } else {
      return a;
    }
  }();
  const oracle::Spectrum s = oracle::jacobi_eigenvalues(ad, args.c.tol);
  const double lmin = s.eigenvalues.front();
  const bool in_band = std::fabs(lmin) <= args.oracle_band * frobenius_norm(ad);
  json o = io::spectrum_json(s);
  o["lambda_min"] = lmin;
  o["in_band"] = in_band;
  o["band"] = args.oracle_band;
  if (in_band) {
    o["agrees"] = nullptr;
  } else {
    o["agrees"] = (lmin > 0) == (cert.verdict == Positivity::Positive) && cert.verdict != Positivity::Boundary;
  }
  if constexpr (is_exact_v<T>) {
    if (a.dim() <= oracle::kDefaultMinorsCap) {
      const bool psd = oracle::psd_oracle_minors(a);
      o["principal_minors_psd"] = psd;
      o["principal_minors_agree"] = psd == (cert.verdict == Positivity::Positive);
    }
  }
  return o;
}

int cmd_check(const CheckArgs& args) {
  const LoadedMatrix m = load_matrix(args.path, args.c);
  return with_matrix(m, args.c.tol, [&](const auto& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = is_positive_operator(a, args.c.tol, PipelineOptions{args.minors_max_dim});
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::optional<json> oracle;
    if (args.oracle) oracle = oracle_report(a, cert, args);

    if (args.c.format == "json") {
      json doc = {{"tool", io::kToolName},
                  {"version", io::kToolVersion},
                  {"input_digest", "sha256:" + io::sha256_hex(m.raw)},
                  {"regime", to_string(m.regime)},
                  {"wall_time_ms", ms},
                  {"certificate", io::certificate_json(cert)}};
      if (oracle) doc["oracle"] = *oracle;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "verdict: " << to_string(cert.verdict) << "\n"
                << "regime: " << to_string(cert.regime) << "\n"
                << "n: " << cert.n << "  n0: " << cert.n0 << "\n"
                << "charpoly: " << io::format_coefficients(cert.charpoly) << "\n"
                << "Hurwitz determinants (sign rule " << to_string(cert.sign_rule) << "):\n";
      print_hurwitz_table(std::cout, cert.hurwitz, true);
      if (cert.witness) std::cout << "witness: " << *cert.witness << "\n";
      if (!cert.notes.empty()) std::cout << "notes: " << cert.notes << "\n";
      if (oracle) {
        std::cout << "oracle lambda_min: " << fmt((*oracle)["lambda_min"].template get<double>())
                  << "  agrees: " << (*oracle)["agrees"].dump() << "\n";
      }
    }
    return exit_code(cert.verdict);
  });
}

// ---- charpoly ------------------------------------------------------------

struct CharpolyArgs {
  Common c;
  std::string path;
  std::string method = "minors";
};

int cmd_charpoly(const CharpolyArgs& args) {
  const LoadedMatrix m = load_matrix(args.path, args.c);
  return with_matrix(m, args.c.tol, [&](const auto& a) {
    using T = std::decay_t<decltype(a(0, 0).re)>;
    std::optional<RealPolynomial<T>> traces, minors;
    if (args.method != "minors") traces = charpoly_traces(a, args.c.tol);
    if (args.method != "traces") minors = charpoly_minors(a, args.c.tol);
    std::optional<T> discrepancy;
    if (traces && minors) {
      T d(0);
      for (std::size_t k = 0; k < traces->coeffs().size(); ++k) {
        T diff = ScalarTraits<T>::abs(T(traces->coeffs()[k] - minors->coeffs()[k]));
        if (diff > d) d = diff;
      }
      discrepancy = d;
    }
    if (args.c.format == "json") {
      json doc = {{"regime", to_string(m.regime)}, {"n", a.dim()}};
      auto coeffs = [](const RealPolynomial<T>& p) {
        json out = json::array();
        for (const T& x : p.coeffs()) out.push_back(io::scalar_json(x));
        return out;
      };
      if (traces) doc["traces"] = coeffs(*traces);
      if (minors) doc["minors"] = coeffs(*minors);
      if (discrepancy) doc["discrepancy"] = io::scalar_json(*discrepancy);
      std::cout << doc.dump(2) << "\n";
    } else if (traces && minors) {
      std::cout << "traces: " << io::format_coefficients(*traces) << "\n"
                << "minors: " << io::format_coefficients(*minors) << "\n"
                << "discrepancy: " << fmt(*discrepancy) << "\n";
    } else {
      std::cout << io::format_coefficients(traces ? *traces : *minors) << "\n";
    }
    return 0;
  });
}

// ---- stability / hurwitz -------------------------------------------------

struct PolyArgs {
  Common c;
  std::vector<std::string> coeffs;
  std::string file;
  std::string mode = "left";
  bool extended = false;
  std::size_t upto = 0;
};

std::vector<std::string> coefficient_tokens(const PolyArgs& args) {
  std::vector<std::string> tokens;
  if (!args.file.empty()) tokens = io::split_coefficients(io::read_source(args.file));
  for (const std::string& s : args.coeffs)
    for (std::string& t : io::split_coefficients(s)) tokens.push_back(std::move(t));
  if (tokens.empty()) throw Error(ErrorCode::ParseError, "no coefficients given");
  return tokens;
}

Regime polynomial_regime(const std::vector<std::string>& tokens, const std::string& flag) {
  if (flag != "auto") return regime_from_string(flag);
  try {
    for (const std::string& t : tokens) parse_rational(t);
    return Regime::Exact;
  } catch (const Error&) {
    return Regime::Float;
  }
}

template <class Fn>
int with_polynomial(const PolyArgs& args, Fn&& fn) {
  const std::vector<std::string> tokens = coefficient_tokens(args);
  if (polynomial_regime(tokens, args.c.regime) == Regime::Exact) return fn(io::parse_polynomial_exact(tokens));
  return fn(io::parse_polynomial_float(tokens));
}

template <class T>
json hurwitz_json(const HurwitzReport<T>& h) {
  json d = json::array(), s = json::array();
  for (const T& x : h.deltas) d.push_back(io::scalar_json(x));
  for (const T& x : h.signed_deltas) s.push_back(io::scalar_json(x));
  json out = {{"order", h.order}, {"deltas", d}, {"signed_deltas", s}};
  if (!h.margins.empty()) out["margins"] = h.margins;
  return out;
}

json verdict_json(const Verdict& v) {
  return {{"verdict", to_string(v.kind)},
          {"witness", v.witness ? json(*v.witness) : json(nullptr)},
          {"notes", v.notes}};
}

int cmd_stability(const PolyArgs& args) {
  return with_polynomial(args, [&](const auto& p) {
    using T = std::decay_t<decltype(p.leading())>;
    const bool right = args.mode == "right";
    std::optional<CriterionResult<T>> res;
    Verdict v;
    if (right) {
      res = symmetric_rh(p, args.c.tol);
    } else if (args.extended) {
      res = extended_rh(p, args.c.tol);
    } else {
      res = evaluate_hurwitz_conditions(p, args.c.tol, false, SignRule::Identity);
      v = routh_hurwitz_stable(p, args.c.tol);
    }
    if (right || args.extended) v = res->verdict;
    const std::size_t n0 = (right || args.extended) ? res->zeros.n0 : 0;

    if (args.c.format == "json") {
      json doc = verdict_json(v);
      doc["mode"] = args.mode;
      doc["extended"] = args.extended || right;
      doc["regime"] = to_string(ScalarTraits<T>::regime);
      doc["degree"] = p.degree();
      doc["n0"] = n0;
      doc["hurwitz"] = hurwitz_json(res->hurwitz);
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "polynomial: " << io::format_coefficients(p) << "\n"
                << "mode: " << args.mode << (right ? " (positive real parts)" : " (negative real parts)") << "\n"
                << "n0: " << n0 << "\n"
                << "Hurwitz determinants:\n";
      print_hurwitz_table(std::cout, res->hurwitz, right);
      std::cout << "verdict: " << to_string(v.kind);
      if (v.witness) std::cout << " (k = " << *v.witness << ")";
      std::cout << "\n";
      if (!v.notes.empty()) std::cout << "notes: " << v.notes << "\n";
    }
    return exit_code(v.kind);
  });
}

int cmd_hurwitz(const PolyArgs& args) {
  return with_polynomial(args, [&](const auto& p) {
    using T = std::decay_t<decltype(p.leading())>;
    const std::size_t upto = args.upto == 0 ? p.degree() : args.upto;
    if (p.degree() == 0) throw Error(ErrorCode::InvalidPolynomial, "degree 0 has no Hurwitz determinants");
    const std::vector<T> deltas = hurwitz_determinants(p, upto);
    if (args.c.format == "json") {
      json d = json::array();
      for (const T& x : deltas) d.push_back(io::scalar_json(x));
      json doc = {{"regime", to_string(ScalarTraits<T>::regime)}, {"degree", p.degree()}, {"deltas", d}};
      const DenseMatrix<T> h = hurwitz_matrix(p, upto);
      json rows = json::array();
      for (std::size_t i = 0; i < h.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < h.cols(); ++j) r.push_back(io::scalar_json(h(i, j)));
        rows.push_back(r);
      }
      doc["matrix"] = rows;
      std::cout << doc.dump(2) << "\n";
    } else {
      for (std::size_t k = 0; k < deltas.size(); ++k) std::cout << "Delta_" << (k + 1) << " = " << fmt(deltas[k]) << "\n";
    }
    return 0;
  });
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
  Common c;
  std::string path;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
};

int cmd_oracle(const OracleArgs& args) {
  const LoadedMatrix m = load_matrix(args.path, args.c);
  const HermitianMatrix<double> ad = validate_hermitian(m.file.approx, args.c.tol);
  const oracle::Spectrum s = oracle::jacobi_eigenvalues(ad, args.c.tol);
  json doc = {{"regime", to_string(m.regime)}, {"jacobi", io::spectrum_json(s)}};
  const double sample = oracle::quadratic_form_min_sample(ad, args.trials, args.seed);
  doc["quadratic_form_min_sample"] = {{"value", sample}, {"trials", args.trials}, {"seed", args.seed}};
  std::optional<bool> minors_psd;
  if (m.regime == Regime::Exact && m.file.n <= oracle::kDefaultMinorsCap) {
    minors_psd = oracle::psd_oracle_minors(validate_hermitian(*m.file.exact, args.c.tol));
    doc["principal_minors_psd"] = *minors_psd;
  }
  if (args.c.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "eigenvalues:";
    for (double l : s.eigenvalues) std::cout << " " << fmt(l);
    std::cout << "\njacobi sweeps: " << s.sweeps << "  residual: " << fmt(s.residual) << "\n"
              << "min sampled Rayleigh quotient: " << fmt(sample) << "\n";
    if (minors_psd) std::cout << "principal minors nonnegative: " << (*minors_psd ? "yes" : "no") << "\n";
  }
  if (minors_psd) return *minors_psd ? 0 : 1;
  return s.eigenvalues.front() >= 0 ? 0 : 1;
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
  Common c;
  std::string dims = "2..8";
  bench::BenchConfig cfg;
};

void parse_dims(const std::string& s, bench::BenchConfig& cfg) {
  const std::size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.dim_lo = cfg.dim_hi = std::stoul(s);
    } else {
      cfg.dim_lo = std::stoul(s.substr(0, dots));
      cfg.dim_hi = std::stoul(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "--dims expects N or LO..HI, got '" + s + "'");
  }
}

int cmd_bench(BenchArgs args) {
  parse_dims(args.dims, args.cfg);
  args.cfg.tolerances = args.c.tol;
  const std::vector<bench::BenchRow> rows = bench::run_bench(args.cfg);
  std::size_t decided = 0, agreed = 0;
  for (const auto& r : rows) {
    decided += r.decided;
    agreed += r.agreed;
  }
  const double agreement = decided == 0 ? 1.0 : static_cast<double>(agreed) / static_cast<double>(decided);
  if (args.c.format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"dim", r.dim},
                     {"batch", r.batch},
                     {"hurwitz_median_us", r.hurwitz_median_us},
                     {"jacobi_median_us", r.jacobi_median_us},
                     {"decided", r.decided},
                     {"agreed", r.agreed},
                     {"in_band", r.in_band},
                     {"in_band_boundary", r.in_band_boundary},
                     {"boundary", r.boundary}});
    std::cout << json{{"seed", args.cfg.seed}, {"rows", out}, {"agreement", agreement}}.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(5) << "dim" << std::setw(7) << "batch" << std::setw(15) << "hurwitz_us"
              << std::setw(15) << "jacobi_us" << std::setw(11) << "agreement" << std::setw(9) << "in_band"
              << "boundary\n";
    for (const auto& r : rows) {
      std::ostringstream agree;
      agree << std::fixed << std::setprecision(1) << 100.0 * r.agreement() << "%";
      std::cout << std::setw(5) << r.dim << std::setw(7) << r.batch << std::setw(15) << std::fixed
                << std::setprecision(2) << r.hurwitz_median_us << std::setw(15) << r.jacobi_median_us << std::setw(11)
                << agree.str() << std::setw(9) << r.in_band << r.boundary << "\n";
    }
    std::cout << "overall agreement: " << std::fixed << std::setprecision(1) << 100.0 * agreement << "% (" << agreed
              << "/" << decided << " outside the band)\n";
  }
  return agreed == decided ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue-free positive semidefiniteness certificates via Hurwitz determinants"};
  app.set_version_flag("--version", std::string(io::kToolVersion));
  app.require_subcommand(1);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Certify whether a Hermitian matrix is positive semidefinite");
  c_check->add_option("path", check.path, "Matrix file (JSON or CSV), '-' for stdin")->required();
  c_check->add_flag("--oracle", check.oracle, "Also run the Jacobi eigensolver and report agreement");
  c_check->add_option("--oracle-band", check.oracle_band, "Relative |lambda_min| treated as boundary by --oracle")
      ->capture_default_str();
  c_check->add_option("--minors-max-dim", check.minors_max_dim, "Largest n using the principal-minor construction")
      ->capture_default_str();
  c_check->add_option("--input-format", check.c.input_format)->check(CLI::IsMember({"auto", "json", "csv"}));
  add_regime(c_check, check.c);
  add_format(c_check, check.c, "json");
  add_tolerances(c_check, check.c.tol);

  CharpolyArgs charpoly;
  auto* c_charpoly = app.add_subcommand("charpoly", "Characteristic polynomial coefficients b0..bn");
  c_charpoly->add_option("path", charpoly.path, "Matrix file (JSON or CSV), '-' for stdin")->required();
  c_charpoly->add_option("--method", charpoly.method, "Construction")
      ->check(CLI::IsMember({"traces", "minors", "both"}))
      ->capture_default_str();
  c_charpoly->add_option("--input-format", charpoly.c.input_format)->check(CLI::IsMember({"auto", "json", "csv"}));
  add_regime(c_charpoly, charpoly.c);
  add_format(c_charpoly, charpoly.c, "text");
  add_tolerances(c_charpoly, charpoly.c.tol);

  PolyArgs stability;
  auto* c_stab = app.add_subcommand("stability", "Routh-Hurwitz test on polynomial coefficients (leading first)");
  c_stab->add_option("coeffs", stability.coeffs, "Coefficients b0 .. bn");
  c_stab->add_option("--file", stability.file, "Read coefficients from a file");
  c_stab->add_option("--mode", stability.mode, "left: Re < 0, right: Re > 0 for nonzero roots")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  c_stab->add_flag("--extended", stability.extended, "Left mode: deflate zero roots first");
  add_regime(c_stab, stability.c);
  add_format(c_stab, stability.c, "text");
  add_tolerances(c_stab, stability.c.tol);

  PolyArgs hurwitz;
  auto* c_hur = app.add_subcommand("hurwitz", "Hurwitz determinants of a polynomial");
  c_hur->add_option("coeffs", hurwitz.coeffs, "Coefficients b0 .. bn");
  c_hur->add_option("--file", hurwitz.file, "Read coefficients from a file");
  c_hur->add_option("--upto", hurwitz.upto, "Highest order k (default: degree)");
  add_regime(c_hur, hurwitz.c);
  add_format(c_hur, hurwitz.c, "text");

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "Eigenvalue and principal-minor reference results");
  c_oracle->add_option("path", oracle.path, "Matrix file (JSON or CSV), '-' for stdin")->required();
  c_oracle->add_option("--trials", oracle.trials, "Random vectors for the quadratic-form sample")->capture_default_str();
  c_oracle->add_option("--seed", oracle.seed, "Sampler seed")->capture_default_str();
  c_oracle->add_option("--input-format", oracle.c.input_format)->check(CLI::IsMember({"auto", "json", "csv"}));
  add_regime(c_oracle, oracle.c);
  add_format(c_oracle, oracle.c, "text");
  add_tolerances(c_oracle, oracle.c.tol);

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Time the Hurwitz certificate against the Jacobi eigensolver");
  c_bench->add_option("--dims", bench.dims, "Dimension range LO..HI")->capture_default_str();
  c_bench->add_option("--batch", bench.cfg.batch, "Matrices per dimension")->capture_default_str();
  c_bench->add_option("--seed", bench.cfg.seed, "Generator seed")->capture_default_str();
  c_bench->add_option("--oracle-band", bench.cfg.oracle_band, "Relative |lambda_min| treated as boundary")
      ->capture_default_str();
  add_format(c_bench, bench.c, "text");
  add_tolerances(c_bench, bench.c.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*c_check) return cmd_check(check);
    if (*c_charpoly) return cmd_charpoly(charpoly);
    if (*c_stab) return cmd_stability(stability);
    if (*c_hur) return cmd_hurwitz(hurwitz);
    if (*c_oracle) return cmd_oracle(oracle);
    if (*c_bench) return cmd_bench(bench);
  } catch (const Error& e) {
    std::cerr << "psdcert: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "psdcert: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
