#include "psdcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace psdcert::oracle {

namespace {

double off_diagonal_norm(const ComplexMatrix<double>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j).norm2();
  return std::sqrt(s);
}

// Annihilates a(p, q) with U = D R: D rotates the phase of column q so the
// pivot is real, then R is a real Givens rotation in the (p, q) plane.
void rotate(ComplexMatrix<double>& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const double g = magnitude(a(p, q));
  if (g == 0.0) return;
  const Complex<double> phase(a(p, q).re / g, a(p, q).im / g);  // e^{i phi}
  for (std::size_t r = 0; r < n; ++r) {
    a(r, q) *= phase.conj();
    a(q, r) *= phase;
  }
  a(q, q).im = 0.0;
  const double app = a(p, p).re, aqq = a(q, q).re;
  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const Complex<double> arp = a(r, p), arq = a(r, q);
    a(r, p) = Complex<double>(c) * arp - Complex<double>(s) * arq;
    a(r, q) = Complex<double>(s) * arp + Complex<double>(c) * arq;
    a(p, r) = a(r, p).conj();
    a(q, r) = a(r, q).conj();
  }
  a(p, p) = Complex<double>(app - t * g);
  a(q, q) = Complex<double>(aqq + t * g);
  a(p, q) = Complex<double>(0.0);
  a(q, p) = Complex<double>(0.0);
}

// Dense polynomials in ascending powers, used only by the Sturm counter.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(p[i] * static_cast<long>(i)));
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const Rational f = a[shift + b.size() - 1] / b.back();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_at_zero(const Poly& p) { return p.empty() ? 0 : sign_of(p.front()); }
int sign_at_pos_inf(const Poly& p) { return p.empty() ? 0 : sign_of(p.back()); }
int sign_at_neg_inf(const Poly& p) {
  if (p.empty()) return 0;
  const int s = sign_of(p.back());
  return (p.size() - 1) % 2 == 0 ? s : -s;
}

template <class SignFn>
std::size_t sign_changes(const std::vector<Poly>& chain, SignFn&& sign) {
  std::size_t changes = 0;
  int last = 0;
  for (const Poly& s : chain) {
    const int v = sign(s);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

Spectrum jacobi_eigenvalues(const HermitianMatrix<double>& a, const ToleranceConfig& cfg, int max_sweeps) {
  const ToleranceConfig c = effective<double>(cfg);
  const std::size_t n = a.dim();
  ComplexMatrix<double> m = a.entries();
  const double target = c.oracle_eig_tol * frobenius_norm(a);
  Spectrum out;
  while (off_diagonal_norm(m) > target) {
    if (out.sweeps >= max_sweeps)
      throw Error(ErrorCode::NoConvergence, "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(m, p, q);
    ++out.sweeps;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues.push_back(m(i, i).re);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.residual = std::max(out.residual, magnitude(m(i, j)));
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

bool psd_oracle_minors(const HermitianMatrix<Rational>& a, std::size_t cap) {
  const std::size_t n = a.dim();
  if (n > cap)
    throw Error(ErrorCode::DimensionTooLarge, "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  for (std::size_t k = 1; k <= n; ++k) {
    bool ok = true;
    for_each_subset(n, k, [&](std::span<const std::size_t> idx) {
      if (!ok) return;
      Complex<Rational> d = determinant(principal_submatrix(a.entries(), idx));
      if (d.im != 0) throw Error(ErrorCode::ImaginaryResidue, "principal minor is not real");
      if (d.re < 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

RootCounts count_roots_negative(const RealPolynomial<Rational>& p) {
  Poly asc(p.coeffs().rbegin(), p.coeffs().rend());
  RootCounts out;
  std::size_t n0 = 0;
  while (n0 < asc.size() && asc[n0] == 0) ++n0;
  if (n0 > 0) out.zero = 1;
  Poly q(asc.begin() + static_cast<std::ptrdiff_t>(n0), asc.end());
  if (q.size() <= 1) return out;

  const Poly g = gcd(q, derivative(q));
  if (g.size() > 1) q = divmod(q, g).first;

  std::vector<Poly> chain{q, derivative(q)};
  while (chain.back().size() > 0) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (Rational& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  const std::size_t at_neg = sign_changes(chain, sign_at_neg_inf);
  const std::size_t at_zero = sign_changes(chain, sign_at_zero);
  const std::size_t at_pos = sign_changes(chain, sign_at_pos_inf);
  out.negative = at_neg - at_zero;
  out.positive = at_zero - at_pos;
  return out;
}

double quadratic_form_min_sample(const HermitianMatrix<double>& a, std::size_t trials, std::uint64_t seed) {
  require(trials >= 1, "quadratic_form_min_sample: trials must be >= 1");
  const std::size_t n = a.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex<double>> x(n);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    double norm2 = 0.0;
    for (auto& xi : x) {
      xi = Complex<double>(normal(rng), normal(rng));
      norm2 += xi.re * xi.re + xi.im * xi.im;
    }
    if (norm2 == 0.0) continue;
    // Re <x, A x>; the imaginary part vanishes for Hermitian A.
    double form = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex<double> ax;
      for (std::size_t j = 0; j < n; ++j) ax += a(i, j) * x[j];
      const Complex<double> term = x[i].conj() * ax;
      form += term.re;
    }
    best = std::min(best, form / norm2);
  }
  return best;
}

}  // namespace psdcert::oracle
