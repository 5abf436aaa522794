// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "psdcert/bench.hpp"
#include "psdcert/criteria.hpp"
#include "psdcert/generators.hpp"
#include "psdcert/oracle.hpp"
#include "support.hpp"

using namespace psdcert;

namespace {

using Q = Rational;
using CQ = Complex<Q>;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kOracleBand = 1e-7;       // criterion 2: |lambda_min| <= band * ||A|| is in-band
constexpr double kDualRelative = 1e-9;     // criterion 4: float traces vs minors
constexpr double kEntryBound = 10.0;       // criterion 2: |a_ij| <= 10
constexpr double kLimit1 = 5.0, kLimit2 = 60.0, kLimit3 = 60.0;  // seconds

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
  double limit = 0.0;  // 0: no runtime bound
};

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  std::string summary() const { return count_ == 0 ? "" : " first: " + first_; }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

ComplexMatrix<double> bounded(ComplexMatrix<double> m) {
  double mx = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mx = std::max(mx, magnitude(m(i, j)));
  if (mx > kEntryBound) {
    const Complex<double> f(kEntryBound / mx);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * f;
  }
  return m;
}

std::string matrix_text(const ComplexMatrix<Q>& m) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) s << (j ? ", " : "") << to_string(m(i, j));
    s << "]";
  }
  s << "]";
  return s.str();
}

// ---- 1 ---------------------------------------------------------------------
Outcome exhaustive_2x2() {
  Outcome o;
  Failures f;
  std::size_t count = 0;
  for (int a = -2; a <= 2; ++a)
    for (int d = -2; d <= 2; ++d)
      for (int re = -2; re <= 2; ++re)
        for (int im = -2; im <= 2; ++im) {
          ComplexMatrix<Q> m(2, 2);
          m(0, 0) = CQ(Q(a));
          m(1, 1) = CQ(Q(d));
          m(0, 1) = CQ(Q(re), Q(im));
          m(1, 0) = CQ(Q(re), Q(-im));
          const auto h = validate_hermitian(m);
          const bool closed = positivity_2x2(h).verdict.kind == VerdictKind::Satisfied;
          const auto cert = is_positive_operator(h);
          const bool minors = oracle::psd_oracle_minors(h);
          ++count;
          if (cert.verdict == Positivity::Boundary || closed != (cert.verdict == Positivity::Positive) ||
              closed != minors)
            f.add(matrix_text(m));
        }
  o.pass = f.count() == 0 && count == 625;
  o.detail = std::to_string(count) + " matrices, " + std::to_string(f.count()) + " mismatches" + f.summary();
  o.limit = kLimit1;
  return o;
}

// ---- 2 ---------------------------------------------------------------------
struct FloatCase {
  ComplexMatrix<double> m;
  std::string family;
};

// The float fuzz set, shared with criterion 4.
std::vector<FloatCase> float_fuzz_set() {
  std::vector<FloatCase> out;
  gen::Rng rng(20261016);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  // General random Hermitian matrices.
  for (int t = 0; t < 6000; ++t) out.push_back({bounded(gen::random_hermitian(dim(rng), rng)), "hermitian"});
  // Full-rank and rank-deficient Gram matrices.
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 2 + t % 7;
    const std::size_t rank = t % 2 == 0 ? n : 1 + static_cast<std::size_t>(t / 2) % (n - 1);
    out.push_back({bounded(gen::random_gram(n, rank, rng)), rank == n ? "gram" : "rank-deficient gram"});
  }
  // Shifted so lambda_min sits at a chosen relative distance from 0, on
  // either side, or exactly at 0 up to rounding.
  const double offsets[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 0.0};
  for (int t = 0; t < 2400; ++t) {
    const std::size_t n = 2 + t % 7;
    ComplexMatrix<double> m = gen::random_hermitian(n, rng);
    const auto h = validate_hermitian(m);
    const double lmin = oracle::jacobi_eigenvalues(h).eigenvalues.front();
    const double off = offsets[(t / 2) % 6] * (t % 2 == 0 ? 1.0 : -1.0);
    const double shift = lmin - off * frobenius_norm(h);
    for (std::size_t i = 0; i < n; ++i) m(i, i).re -= shift;
    out.push_back({bounded(m), off == 0.0 ? "shifted to 0" : "shifted"});
  }
  return out;
}

Outcome float_agreement(const std::vector<FloatCase>& set) {
  Outcome o;
  Failures f;
  std::size_t decided = 0, agreed = 0, in_band = 0, in_band_boundary = 0, boundary_total = 0;
  for (const auto& c : set) {
    const auto h = validate_hermitian(c.m);
    const auto cert = is_positive_operator(h);
    const double lmin = oracle::jacobi_eigenvalues(h).eigenvalues.front();
    const double rel = lmin / frobenius_norm(h);
    if (cert.verdict == Positivity::Boundary) ++boundary_total;
    if (std::fabs(rel) <= kOracleBand) {
      ++in_band;
      if (cert.verdict == Positivity::Boundary) ++in_band_boundary;
      else f.add(c.family + " n=" + std::to_string(h.dim()) + " in-band " + std::string(to_string(cert.verdict)));
    } else {
      ++decided;
      const bool ok = (lmin > 0 && cert.verdict == Positivity::Positive) ||
                      (lmin < 0 && cert.verdict == Positivity::NotPositive);
      if (ok) ++agreed;
      else {
        std::ostringstream s;
        s << c.family << " n=" << h.dim() << " lambda_min/||A||=" << rel << " got " << to_string(cert.verdict);
        f.add(s.str());
      }
    }
  }
  o.pass = f.count() == 0 && set.size() >= 10000;
  o.detail = std::to_string(set.size()) + " matrices: " + std::to_string(agreed) + "/" + std::to_string(decided) +
             " decided agree, " + std::to_string(in_band_boundary) + "/" + std::to_string(in_band) +
             " in-band Boundary, " + std::to_string(boundary_total - in_band_boundary) +
             " Boundary outside the band" + f.summary();
  o.limit = kLimit2;
  return o;
}

// ---- 3 ---------------------------------------------------------------------
Outcome constructed_spectra() {
  Outcome o;
  Failures f;
  gen::Rng rng(3);
  std::uniform_int_distribution<int> kind(0, 5);
  std::size_t count = 0, positive = 0, singular = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
    std::vector<Q> spectrum;
    for (std::size_t i = 0; i < n; ++i) {
      const int k = kind(rng);
      Q v = abs(ref::small_rational(rng, 9, 5));
      if (v == 0) v = Q(1, 3);
      // roughly: 2/6 zero, 3/6 positive, 1/6 negative
      spectrum.push_back(k <= 1 ? Q(0) : k <= 4 ? v : Q(-v));
    }
    const auto q = gen::rational_unitary(n, gen::random_rotations(n, 2 * n, rng));
    const auto a = validate_hermitian(gen::conjugate_diagonal(q, spectrum));
    const std::size_t zeros = static_cast<std::size_t>(std::count(spectrum.begin(), spectrum.end(), Q(0)));
    const bool psd = std::all_of(spectrum.begin(), spectrum.end(), [](const Q& l) { return l >= 0; });
    const auto cert = is_positive_operator(a);
    ++count;
    positive += psd;
    singular += zeros > 0;
    const Positivity expect = psd ? Positivity::Positive : Positivity::NotPositive;
    if (cert.verdict != expect || cert.n0 != zeros)
      f.add("n=" + std::to_string(n) + " n0 " + std::to_string(cert.n0) + " vs " + std::to_string(zeros));
  }
  o.pass = f.count() == 0;
  o.detail = std::to_string(count) + " matrices (" + std::to_string(positive) + " PSD, " + std::to_string(singular) +
             " singular), " + std::to_string(f.count()) + " mismatches" + f.summary();
  o.limit = kLimit3;
  return o;
}

// ---- 4 ---------------------------------------------------------------------
Outcome dual_charpoly(const std::vector<FloatCase>& fuzz) {
  Outcome o;
  Failures f;
  gen::Rng rng(4);
  std::size_t exact_count = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 8);
    const auto raw = gen::random_integer_hermitian(n, rng, 3);
    const auto a = validate_hermitian(raw);
    const auto pt = charpoly_traces(a), pm = charpoly_minors(a);
    const Q det = ref::gauss_det(ref::rows_of(raw)).re;
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += raw(i, i).re;
    ++exact_count;
    if (!(pt == pm)) f.add("exact n=" + std::to_string(n) + " routes differ");
    if (pt.coeffs()[1] != -tr) f.add("exact b1 != -tr");
    if (pt.coeffs()[n] != (n % 2 == 0 ? det : Q(-det))) f.add("exact bn != (-1)^n det");
  }
  double worst = 0.0;
  for (const auto& c : fuzz) {
    const auto a = validate_hermitian(c.m);
    const std::size_t n = a.dim();
    const auto pt = charpoly_traces(a), pm = charpoly_minors(a);
    const double fro = frobenius_norm(a);
    for (std::size_t k = 1; k <= n; ++k) {
      const double rel = std::fabs(pt.coeffs()[k] - pm.coeffs()[k]) / coefficient_scale(n, k, fro);
      worst = std::max(worst, rel);
    }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += a(i, i).re;
    const double det = ref::gauss_det(ref::rows_of(a.entries())).re;
    const double bn = n % 2 == 0 ? det : -det;
    if (std::fabs(pm.coeffs()[1] + tr) > kDualRelative * coefficient_scale(n, 1, fro)) f.add("float b1 != -tr");
    if (std::fabs(pm.coeffs()[n] - bn) > kDualRelative * coefficient_scale(n, n, fro)) f.add("float bn anchor");
    if (std::fabs(pt.coeffs()[n] - bn) > kDualRelative * coefficient_scale(n, n, fro)) f.add("float bn anchor");
  }
  if (worst > kDualRelative) f.add("float routes differ by " + std::to_string(worst));
  std::ostringstream s;
  s << exact_count << " exact matrices identical, " << fuzz.size() << " float matrices within " << kDualRelative
    << " (worst " << worst << "), anchors checked, " << f.count() << " failures" << f.summary();
  o.pass = f.count() == 0;
  o.detail = s.str();
  return o;
}

// ---- 5 and 6 ---------------------------------------------------------------
struct RootedCase {
  std::vector<Q> roots;
  RealPolynomial<Q> p;
};

std::vector<RootedCase> rooted_suite() {
  std::vector<RootedCase> out;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(1, 8), kind(0, 9);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Q> roots;
    const int n = len(rng);
    // Bias the suite toward sign-homogeneous root sets so both verdicts occur often.
    const int mode = t % 4;  // 0: mixed, 1: all positive (some zero), 2: all negative, 3: all positive
    for (int i = 0; i < n; ++i) {
      Q r = abs(ref::small_rational(rng, 7, 4));
      if (r == 0) r = Q(2, 3);
      const int k = kind(rng);
      if (mode == 0) roots.push_back(k < 2 ? Q(0) : k < 6 ? r : Q(-r));
      else if (mode == 1) roots.push_back(k < 2 ? Q(0) : r);
      else if (mode == 2) roots.push_back(Q(-r));
      else roots.push_back(r);
    }
    out.push_back({roots, RealPolynomial<Q>(ref::poly_from_roots(roots))});
  }
  return out;
}

Outcome sturm_ground_truth(const std::vector<RootedCase>& suite) {
  Outcome o;
  Failures f;
  std::size_t stable = 0, right = 0;
  for (std::size_t t = 0; t < suite.size(); ++t) {
    const auto& c = suite[t];
    std::vector<Q> distinct = c.roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    oracle::RootCounts expect;
    for (const Q& r : distinct) {
      if (r < 0) ++expect.negative;
      else if (r > 0) ++expect.positive;
      else expect.zero = 1;
    }
    const auto counts = oracle::count_roots_negative(c.p);
    if (!(counts == expect)) f.add("case " + std::to_string(t) + ": Sturm counts differ from constructed roots");

    const bool all_negative = std::all_of(c.roots.begin(), c.roots.end(), [](const Q& r) { return r < 0; });
    const bool nonzero_positive = std::all_of(c.roots.begin(), c.roots.end(), [](const Q& r) { return r >= 0; });
    const bool rh = routh_hurwitz_stable(c.p).kind == VerdictKind::Satisfied;
    const bool sym = symmetric_rh(c.p).verdict.kind == VerdictKind::Satisfied;
    // the Sturm counts say the same thing
    const bool sturm_neg = counts.zero == 0 && counts.positive == 0;
    const bool sturm_pos = counts.negative == 0;
    stable += rh;
    right += sym;
    if (rh != all_negative || rh != sturm_neg) f.add("case " + std::to_string(t) + ": routh_hurwitz_stable");
    if (sym != nonzero_positive || sym != sturm_pos) f.add("case " + std::to_string(t) + ": symmetric_rh");
  }
  o.pass = f.count() == 0;
  o.detail = std::to_string(suite.size()) + " polynomials (" + std::to_string(stable) + " left-stable, " +
             std::to_string(right) + " right), " + std::to_string(f.count()) + " mismatches" + f.summary();
  return o;
}

Outcome sign_rule_regression(const std::vector<RootedCase>& suite) {
  Outcome o;
  Failures f;
  // The witness polynomial z^2 - 3z + 2 = (z - 1)(z - 2).
  const RealPolynomial<Q> w({Q(1), Q(-3), Q(2)});
  const auto good = symmetric_rh(w, {}, SignRule::CeilHalf).verdict;
  const auto bad = symmetric_rh(w, {}, SignRule::OnePlusFloorHalf).verdict;
  if (good.kind != VerdictKind::Satisfied) f.add("implemented rule rejects z^2 - 3z + 2");
  if (bad.kind != VerdictKind::Violated || bad.witness != 2u) f.add("floor rule does not fail at k = 2");

  // Across the criterion-5 suite: the implemented rule never errs; the
  // floor rule errs, first at an even k.
  std::size_t floor_wrong = 0, implemented_wrong = 0;
  bool even_first = true;
  for (const auto& c : suite) {
    const bool truth = std::all_of(c.roots.begin(), c.roots.end(), [](const Q& r) { return r >= 0; });
    const auto imp = symmetric_rh(c.p, {}, SignRule::CeilHalf).verdict;
    const auto pr = symmetric_rh(c.p, {}, SignRule::OnePlusFloorHalf).verdict;
    implemented_wrong += (imp.kind == VerdictKind::Satisfied) != truth;
    if ((pr.kind == VerdictKind::Satisfied) != truth) {
      ++floor_wrong;
      if (pr.witness && *pr.witness % 2 != 0 && truth) even_first = false;
    }
  }
  if (implemented_wrong != 0) f.add(std::to_string(implemented_wrong) + " errors under the implemented rule");
  if (floor_wrong == 0) f.add("floor rule never fails on the suite");
  if (!even_first) f.add("a floor-rule failure on a positive-rooted polynomial is at odd k");
  o.pass = f.count() == 0;
  o.detail = "z^2-3z+2: implemented " + std::string(to_string(good.kind)) + ", floor rule " +
             std::string(to_string(bad.kind)) + " at k=" + (bad.witness ? std::to_string(*bad.witness) : "-") +
             "; suite: floor rule wrong on " + std::to_string(floor_wrong) + "/" + std::to_string(suite.size()) +
             ", implemented wrong on " + std::to_string(implemented_wrong) + f.summary();
  return o;
}

// ---- 7 ---------------------------------------------------------------------
Outcome deflation_lemma() {
  Outcome o;
  Failures f;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 7), zeros(1, 4);
  std::size_t compared = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<Q> c{Q(1) + abs(ref::small_rational(rng))};
    const int m = len(rng);
    for (int k = 1; k <= m; ++k) c.push_back(ref::small_rational(rng));
    if (c.back() == 0) c.back() = Q(-5, 7);
    const std::size_t forced = static_cast<std::size_t>(zeros(rng));
    c.insert(c.end(), forced, Q(0));
    const RealPolynomial<Q> p(c);
    const auto z = zero_root_multiplicity(p, {});
    if (z.n0 != forced) f.add("n0 " + std::to_string(z.n0) + " vs forced " + std::to_string(forced));
    const std::size_t upto = p.degree() - z.n0;
    const auto dp = hurwitz_determinants(p, upto), dh = hurwitz_determinants(z.deflated, upto);
    compared += upto;
    if (dp != dh) f.add("case " + std::to_string(t));
  }
  o.pass = f.count() == 0;
  o.detail = "1000 polynomials, " + std::to_string(compared) + " determinant pairs identical unless listed, " +
             std::to_string(f.count()) + " failures" + f.summary();
  return o;
}

// ---- 8 ---------------------------------------------------------------------
Outcome bench_sanity() {
  Outcome o;
  bench::BenchConfig cfg;  // dims 2..8, batch 100, seed 1
  const auto rows = bench::run_bench(cfg);
  std::size_t decided = 0, agreed = 0;
  std::ostringstream s;
  for (const auto& r : rows) {
    decided += r.decided;
    agreed += r.agreed;
  }
  s << rows.size() << " rows, agreement " << agreed << "/" << decided << " outside the band; median us (hurwitz/jacobi):";
  for (const auto& r : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " n=%zu %.1f/%.1f", r.dim, r.hurwitz_median_us, r.jacobi_median_us);
    s << buf;
  }
  o.pass = rows.size() == 7 && agreed == decided;
  o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<FloatCase> fuzz;
  std::vector<RootedCase> rooted;
  const std::vector<Criterion> criteria{
      {1, "exhaustive 2x2 agreement", exhaustive_2x2},
      {2, "randomized float agreement, n <= 8",
       [&] {
         fuzz = float_fuzz_set();
         return float_agreement(fuzz);
       }},
      {3, "constructed-spectrum exactness", constructed_spectra},
      {4, "dual charpoly agreement", [&] { return dual_charpoly(fuzz); }},
      {5, "criterion ground truth via Sturm",
       [&] {
         rooted = rooted_suite();
         return sturm_ground_truth(rooted);
       }},
      {6, "sign-rule regression", [&] { return sign_rule_regression(rooted); }},
      {7, "deflation lemma", deflation_lemma},
      {8, "bench sanity", bench_sanity},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.limit > 0.0 && o.seconds >= o.limit) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(o.limit)) + " s limit]";
    }
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                o.seconds);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
