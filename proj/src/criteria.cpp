#include "psdcert/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace psdcert {

int sign_factor(SignRule rule, std::size_t k) {
  switch (rule) {
    case SignRule::Identity: return 1;
    case SignRule::CeilHalf: return ((k + 1) / 2) % 2 == 0 ? 1 : -1;
    case SignRule::OnePlusFloorHalf: return (1 + k / 2) % 2 == 0 ? 1 : -1;
  }
  return 1;
}

std::string_view to_string(SignRule rule) {
  switch (rule) {
    case SignRule::Identity: return "identity";
    case SignRule::CeilHalf: return "ceil_k_over_2";
    case SignRule::OnePlusFloorHalf: return "one_plus_floor_k_over_2";
  }
  return "?";
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Satisfied: return "Satisfied";
    case VerdictKind::Violated: return "Violated";
    case VerdictKind::Boundary: return "Boundary";
  }
  return "?";
}

std::string_view to_string(Positivity v) {
  switch (v) {
    case Positivity::Positive: return "Positive";
    case Positivity::NotPositive: return "NotPositive";
    case Positivity::Boundary: return "Boundary";
  }
  return "?";
}

std::string_view to_string(CharpolyRoute r) { return r == CharpolyRoute::Minors ? "minors" : "traces"; }

namespace {

// Rounding noise is estimated, not bounded; this factor covers the gap.
constexpr double kRoundingSafety = 16.0;

// Cofactor matrix by explicit minors, so singular inputs are fine.
DenseMatrix<double> cofactors(const DenseMatrix<double>& m) {
  const std::size_t k = m.rows();
  DenseMatrix<double> c(k, k);
  if (k == 1) {
    c(0, 0) = 1.0;
    return c;
  }
  DenseMatrix<double> sub(k - 1, k - 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t r = 0, rr = 0; r < k; ++r) {
        if (r == i) continue;
        for (std::size_t s = 0, ss = 0; s < k; ++s) {
          if (s == j) continue;
          sub(rr, ss++) = m(r, s);
        }
        ++rr;
      }
      double d = determinant(sub);
      c(i, j) = (i + j) % 2 == 0 ? d : -d;
    }
  return c;
}

template <class T>
CriterionResult<T> evaluate_exact(const RealPolynomial<T>& p, bool deflate, SignRule rule) {
  ZeroRootAnalysis<T> zeros = deflate ? zero_root_multiplicity(p, ToleranceConfig::exact())
                                      : ZeroRootAnalysis<T>{0, p, false};
  const std::size_t m = p.degree() - zeros.n0;
  HurwitzReport<T> rep;
  rep.order = m;
  Verdict v;
  if (m > 0) rep.deltas = hurwitz_determinants(p, m);
  for (std::size_t k = 1; k <= m; ++k) {
    const T& d = rep.deltas[k - 1];
    rep.signed_deltas.push_back(sign_factor(rule, k) > 0 ? d : T(-d));
    if (!rep.first_nonpositive_index && !(rep.signed_deltas.back() > 0)) rep.first_nonpositive_index = k;
  }
  if (rep.first_nonpositive_index) {
    const std::size_t k = *rep.first_nonpositive_index;
    v.kind = VerdictKind::Violated;
    v.witness = k;
    v.notes = rep.deltas[k - 1] == 0
                  ? "Delta_" + std::to_string(k) + " = 0 with n0 = " + std::to_string(zeros.n0) +
                        ": the strict condition fails"
                  : "sigma_" + std::to_string(k) + " * Delta_" + std::to_string(k) + " < 0";
  } else if (m == 0) {
    v.notes = "empty condition set (n - n0 = 0)";
  }
  return {std::move(zeros), std::move(rep), std::move(v)};
}

CriterionResult<double> evaluate_float(const RealPolynomial<double>& p, const ToleranceConfig& cfg, bool deflate,
                                       SignRule rule, const std::vector<double>& noise) {
  const ToleranceConfig c = effective<double>(cfg);
  const std::size_t n = p.degree();
  require(noise.empty() || noise.size() == n + 1, "noise vector size must be degree + 1");
  std::vector<double> padded(noise);
  for (double& e : padded) e *= kRoundingSafety;

  ZeroRootAnalysis<double> zeros = deflate ? zero_root_multiplicity(p, c, padded)
                                           : ZeroRootAnalysis<double>{0, p, false};
  const std::size_t m = n - zeros.n0;

  // Rescale so the roots are O(1): c_j = b_j / (b0 rho^j). Delta_k of the
  // original is Delta_k of the rescaled times b0^k rho^(k(k+1)/2) > 0.
  double rho = root_scale(p);
  if (rho == 0.0) rho = 1.0;
  const double b0 = p.leading();
  std::vector<double> cn(m + 1), nz(m + 1, 0.0);
  {
    double pw = b0;
    for (std::size_t j = 0; j <= m; ++j) {
      cn[j] = p.coeffs()[j] / pw;
      if (!padded.empty()) nz[j] = padded[j] / pw;
      pw *= rho;
    }
  }
  const RealPolynomial<double> scaled(cn);

  HurwitzReport<double> rep;
  rep.order = m;
  std::optional<std::size_t> first_fail, first_band;
  for (std::size_t k = 1; k <= m; ++k) {
    DenseMatrix<double> hm = hurwitz_matrix(scaled, k);
    const double d = determinant(hm);
    const DenseMatrix<double> cof = cofactors(hm);
    double u = 0.0;
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t l = 1; l <= k; ++l) {
        if (2 * l < i + 1 || 2 * l - i > m) continue;
        const std::size_t j = 2 * l - i;  // entry holds c_j, j >= 1
        // A root shift of size band moves c_j by about band * |c_{j-1}|.
        u += std::fabs(cof(i - 1, l - 1)) * (c.boundary_band * std::fabs(cn[j - 1]) + nz[j]);
      }
    const double scale = std::pow(b0, static_cast<double>(k)) * std::pow(rho, static_cast<double>(k * (k + 1)) / 2.0);
    const double delta = d * scale;
    const double sd = sign_factor(rule, k) * d;
    rep.deltas.push_back(delta);
    rep.signed_deltas.push_back(sign_factor(rule, k) * delta);
    rep.margins.push_back(u > 0.0 ? std::fabs(d) / u : std::numeric_limits<double>::infinity());
    const bool undecided = std::fabs(d) <= u;
    if (undecided) {
      if (!first_band) first_band = k;
    } else if (!(sd > 0.0)) {
      if (!first_fail) first_fail = k;
    }
    if (!rep.first_nonpositive_index && (undecided || !(sd > 0.0))) rep.first_nonpositive_index = k;
  }

  // All Delta_k > 0 forces every coefficient of the matching half-plane
  // polynomial to be positive. A coefficient clearly of the wrong sign thus
  // settles the undecided determinants: one of them is not positive. This
  // catches roots in +-r pairs, where Delta_k vanishes far from any zero root.
  std::optional<std::size_t> wrong_sign;
  if (!first_fail && first_band && rule != SignRule::OnePlusFloorHalf) {
    double pow2 = 1.0;
    for (std::size_t j = 1; j <= m && !wrong_sign; ++j) {
      pow2 *= 2.0;
      const double s = (rule == SignRule::CeilHalf && j % 2 == 1) ? -cn[j] : cn[j];
      const double u = c.boundary_band * static_cast<double>(j) *
                           binomial(static_cast<int>(m), static_cast<int>(j)) * pow2 + nz[j];
      if (s < -u) wrong_sign = j;
    }
  }

  Verdict v;
  if (first_fail) {
    v.kind = VerdictKind::Violated;
    v.witness = first_fail;
    v.notes = "sigma_" + std::to_string(*first_fail) + " * Delta_" + std::to_string(*first_fail) +
              " is negative beyond its uncertainty";
  } else if (wrong_sign) {
    v.kind = VerdictKind::Violated;
    v.witness = first_band;
    v.notes = "b_" + std::to_string(*wrong_sign) + " has the wrong sign, so some Delta_k with k >= " +
              std::to_string(*first_band) + " is not positive";
  } else if (first_band) {
    v.kind = VerdictKind::Boundary;
    v.witness = first_band;
    v.notes = "Delta_" + std::to_string(*first_band) + " is indistinguishable from 0 at boundary_band";
  } else if (zeros.thresholded) {
    v.kind = VerdictKind::Boundary;
    v.witness = m + 1;
    v.notes = std::to_string(zeros.n0) + " near-zero root(s) absorbed by zero_coeff_tol";
  } else if (m == 0) {
    v.notes = "empty condition set (n - n0 = 0)";
  }
  return {std::move(zeros), std::move(rep), std::move(v)};
}

}  // namespace

template <class T>
CriterionResult<T> evaluate_hurwitz_conditions(const RealPolynomial<T>& p, const ToleranceConfig& cfg, bool deflate,
                                               SignRule rule, const std::vector<double>& noise) {
  if constexpr (is_exact_v<T>) {
    (void)cfg;
    (void)noise;
    return evaluate_exact(p, deflate, rule);
  } else {
    return evaluate_float(p, cfg, deflate, rule, noise);
  }
}

template <class T>
Verdict routh_hurwitz_stable(const RealPolynomial<T>& p, const ToleranceConfig& cfg) {
  return evaluate_hurwitz_conditions(p, cfg, false, SignRule::Identity).verdict;
}

template <class T>
CriterionResult<T> extended_rh(const RealPolynomial<T>& p, const ToleranceConfig& cfg) {
  return evaluate_hurwitz_conditions(p, cfg, true, SignRule::Identity);
}

template <class T>
CriterionResult<T> symmetric_rh(const RealPolynomial<T>& p, const ToleranceConfig& cfg, SignRule rule) {
  return evaluate_hurwitz_conditions(p, cfg, true, rule);
}

namespace {

// A zero eigenvalue sits on the PSD boundary: binary64 cannot tell it from
// a tiny negative one, even when the coefficient came out exactly 0.
void singular_is_boundary(Verdict& v, std::size_t n, std::size_t n0) {
  if (n0 == 0 || v.kind != VerdictKind::Satisfied) return;
  v = {VerdictKind::Boundary, n - n0 + 1,
       std::to_string(n0) + " zero eigenvalue(s) at float precision; use the exact regime to certify"};
}

Positivity to_positivity(VerdictKind k) {
  switch (k) {
    case VerdictKind::Satisfied: return Positivity::Positive;
    case VerdictKind::Violated: return Positivity::NotPositive;
    case VerdictKind::Boundary: return Positivity::Boundary;
  }
  return Positivity::Boundary;
}

}  // namespace

template <class T>
PositivityCertificate<T> is_positive_operator(const HermitianMatrix<T>& a, const ToleranceConfig& cfg,
                                              const PipelineOptions& opts) {
  const ToleranceConfig c = effective<T>(cfg);
  const std::size_t n = a.dim();
  PositivityCertificate<T> cert;
  cert.n = n;
  cert.tolerances = c;
  cert.sign_rule = SignRule::CeilHalf;

  RealPolynomial<T> traces = charpoly_traces(a, c);
  std::vector<double> noise;
  if (n <= opts.minors_max_dim) {
    RealPolynomial<T> minors = charpoly_minors(a, c);
    cert.routes_cross_checked = true;
    cert.route = CharpolyRoute::Minors;
    if constexpr (is_exact_v<T>) {
      if (!(traces == minors))
        throw Error(ErrorCode::ConstructionMismatch, "trace and minor constructions differ in exact arithmetic");
    } else {
      const double fro = frobenius_norm(a);
      noise.assign(n + 1, 0.0);
      for (std::size_t k = 1; k <= n; ++k) {
        const double diff = std::fabs(traces.coeffs()[k] - minors.coeffs()[k]);
        const double scale = coefficient_scale(n, k, fro);
        noise[k] = diff + std::numeric_limits<double>::epsilon() * scale;
        if (scale > 0.0) cert.construction_discrepancy = std::max(cert.construction_discrepancy, diff / scale);
      }
      if (cert.construction_discrepancy > c.construction_tol)
        throw Error(ErrorCode::ConstructionMismatch,
                    "scaled discrepancy " + ScalarTraits<double>::to_string(cert.construction_discrepancy) +
                        " exceeds construction_tol");
    }
    cert.charpoly = std::move(minors);
  } else {
    cert.route = CharpolyRoute::Traces;
    if constexpr (!is_exact_v<T>) {
      const double fro = frobenius_norm(a);
      noise.assign(n + 1, 0.0);
      for (std::size_t k = 1; k <= n; ++k)
        noise[k] = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * coefficient_scale(n, k, fro);
    }
    cert.charpoly = std::move(traces);
  }

  CriterionResult<T> res = evaluate_hurwitz_conditions(cert.charpoly, c, true, cert.sign_rule, noise);
  if constexpr (!is_exact_v<T>) singular_is_boundary(res.verdict, n, res.zeros.n0);
  cert.n0 = res.zeros.n0;
  cert.hurwitz = std::move(res.hurwitz);
  cert.verdict = to_positivity(res.verdict.kind);
  cert.witness = res.verdict.witness;
  cert.notes = std::move(res.verdict.notes);
  if (cert.n0 == n && cert.verdict == Positivity::Positive) cert.notes = "zero operator: no condition to check";
  return cert;
}

template <class T>
ClosedFormVerdict positivity_2x2(const HermitianMatrix<T>& a) {
  if (a.dim() != 2) throw Error(ErrorCode::WrongDimension, "positivity_2x2 needs a 2x2 matrix");
  const T tr = trace(a);
  const T det = T(a(0, 0).re * a(1, 1).re - a(0, 1).norm2());
  ClosedFormVerdict out;
  out.n0 = det != 0 ? 0 : (tr != 0 ? 1 : 2);
  if (det == 0) {
    if (tr >= 0) {
      out.verdict.notes = "det = 0, tr >= 0";
    } else {
      out.verdict = {VerdictKind::Violated, 1, "det = 0, tr < 0"};
    }
  } else if (det > 0) {
    if (tr > 0) out.verdict.notes = "det > 0, tr > 0";
    else out.verdict = {VerdictKind::Violated, 1, "det > 0, tr <= 0"};
  } else {
    out.verdict = {VerdictKind::Violated, 2, "det < 0"};
  }
  return out;
}

template <class T>
ClosedFormVerdict positivity_3x3(const HermitianMatrix<T>& a, const ToleranceConfig& cfg) {
  if (a.dim() != 3) throw Error(ErrorCode::WrongDimension, "positivity_3x3 needs a 3x3 matrix");
  const T tr = trace(a);
  const T tr2 = trace_power(a, 2, cfg);
  const T det = determinant(a, cfg);
  const T b1 = -tr;
  const T b2 = T((tr * tr - tr2) / 2);
  const T b3 = -det;
  ClosedFormVerdict out;
  if constexpr (is_exact_v<T>) {
    // -Delta_1 = tr, -Delta_2 = tr*b2 - det, Delta_3 = det*(tr*b2 - det).
    const T minus_d2 = T(tr * b2 - det);
    if (b3 != 0) {
      out.n0 = 0;
      if (!(tr > 0)) out.verdict = {VerdictKind::Violated, 1, "tr <= 0"};
      else if (!(minus_d2 > 0)) out.verdict = {VerdictKind::Violated, 2, "tr*b2 - det <= 0"};
      else if (!(det * minus_d2 > 0)) out.verdict = {VerdictKind::Violated, 3, "det*(tr*b2 - det) <= 0"};
      else out.verdict.notes = "n0 = 0: tr > 0, tr*b2 - det > 0, det*(tr*b2 - det) > 0";
    } else if (b2 != 0) {
      out.n0 = 1;
      if (!(tr > 0)) out.verdict = {VerdictKind::Violated, 1, "tr <= 0"};
      else if (!(tr * b2 > 0)) out.verdict = {VerdictKind::Violated, 2, "tr*b2 <= 0"};
      else out.verdict.notes = "n0 = 1: tr > 0, b2 > 0";
    } else if (b1 != 0) {
      out.n0 = 2;
      if (!(tr > 0)) out.verdict = {VerdictKind::Violated, 1, "tr <= 0"};
      else out.verdict.notes = "n0 = 2: tr > 0";
    } else {
      out.n0 = 3;
      out.verdict.notes = "n0 = 3: zero operator";
    }
  } else {
    const RealPolynomial<double> p({1.0, b1, b2, b3});
    const double fro = frobenius_norm(a);
    std::vector<double> noise(4, 0.0);
    for (std::size_t k = 1; k <= 3; ++k)
      noise[k] = 8.0 * std::numeric_limits<double>::epsilon() * coefficient_scale(3, k, fro);
    CriterionResult<double> r = evaluate_hurwitz_conditions(p, cfg, true, SignRule::CeilHalf, noise);
    singular_is_boundary(r.verdict, 3, r.zeros.n0);
    out.n0 = r.zeros.n0;
    out.verdict = std::move(r.verdict);
  }
  return out;
}

#define PSDCERT_INSTANTIATE(T)                                                                                    \
  template CriterionResult<T> evaluate_hurwitz_conditions(const RealPolynomial<T>&, const ToleranceConfig&, bool, \
                                                          SignRule, const std::vector<double>&);                  \
  template Verdict routh_hurwitz_stable(const RealPolynomial<T>&, const ToleranceConfig&);                        \
  template CriterionResult<T> extended_rh(const RealPolynomial<T>&, const ToleranceConfig&);                      \
  template CriterionResult<T> symmetric_rh(const RealPolynomial<T>&, const ToleranceConfig&, SignRule);           \
  template PositivityCertificate<T> is_positive_operator(const HermitianMatrix<T>&, const ToleranceConfig&,       \
                                                         const PipelineOptions&);                                 \
  template ClosedFormVerdict positivity_2x2(const HermitianMatrix<T>&);                                           \
  template ClosedFormVerdict positivity_3x3(const HermitianMatrix<T>&, const ToleranceConfig&);

PSDCERT_INSTANTIATE(Rational)
PSDCERT_INSTANTIATE(double)

}  // namespace psdcert
