#include "psdcert/generators.hpp"

#include <algorithm>
#include <cmath>

namespace psdcert::gen {

ComplexMatrix<double> random_hermitian(std::size_t n, Rng& rng, double bound) {
  std::uniform_real_distribution<double> u(-bound, bound);
  ComplexMatrix<double> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex<double>(u(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = Complex<double>(u(rng), u(rng));
      a(j, i) = a(i, j).conj();
    }
  }
  return a;
}

ComplexMatrix<double> random_gram(std::size_t n, std::size_t rank, Rng& rng, double bound) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix<double> b(n, rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rank; ++j) b(i, j) = Complex<double>(u(rng), u(rng));
  ComplexMatrix<double> g = b * adjoint(b);
  double big = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) big = std::max(big, magnitude(g(i, j)));
  if (big > 0.0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) *= Complex<double>(bound / big);
  // B B* is Hermitian up to rounding in the product; make it exact.
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i).im = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) g(j, i) = g(i, j).conj();
  }
  return g;
}

ComplexMatrix<double> mixed_family(std::size_t n, std::size_t index, Rng& rng) {
  switch (static_cast<Family>(index % 3)) {
    case Family::Hermitian: return random_hermitian(n, rng);
    case Family::Gram: return random_gram(n, n, rng);
    case Family::RankDeficientGram: {
      std::uniform_int_distribution<std::size_t> r(1, std::max<std::size_t>(1, n - 1));
      return random_gram(n, n == 1 ? 1 : r(rng), rng);
    }
  }
  return random_hermitian(n, rng);
}

ComplexMatrix<Rational> random_integer_hermitian(std::size_t n, Rng& rng, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  ComplexMatrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex<Rational>(Rational(u(rng)));
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = Complex<Rational>(Rational(u(rng)), Rational(u(rng)));
      a(j, i) = a(i, j).conj();
    }
  }
  return a;
}

ComplexMatrix<Rational> rational_unitary(std::size_t n, const std::vector<PlaneRotation>& rotations) {
  ComplexMatrix<Rational> q = ComplexMatrix<Rational>::identity(n);
  for (const PlaneRotation& r : rotations) {
    require(r.p < n && r.q < n && r.p != r.q, "rational_unitary: bad rotation plane");
    const Rational d = 1 + r.t * r.t;
    const Rational c = (1 - r.t * r.t) / d, s = 2 * r.t / d;
    const Rational e = 1 + r.u * r.u;
    const Complex<Rational> phase((1 - r.u * r.u) / e, 2 * r.u / e);
    ComplexMatrix<Rational> g = ComplexMatrix<Rational>::identity(n);
    g(r.p, r.p) = Complex<Rational>(c);
    g(r.p, r.q) = Complex<Rational>(Rational(-s)) * phase;
    g(r.q, r.p) = Complex<Rational>(s);
    g(r.q, r.q) = Complex<Rational>(c) * phase;
    q = q * g;
  }
  return q;
}

ComplexMatrix<Rational> conjugate_diagonal(const ComplexMatrix<Rational>& q, const std::vector<Rational>& spectrum) {
  const std::size_t n = q.rows();
  require(spectrum.size() == n, "conjugate_diagonal: spectrum size mismatch");
  ComplexMatrix<Rational> qd = q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) qd(i, j) *= Complex<Rational>(spectrum[j]);
  return qd * adjoint(q);
}

std::vector<PlaneRotation> random_rotations(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<PlaneRotation> out;
  if (n < 2) return out;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (std::size_t i = 0; i < count; ++i) {
    PlaneRotation r;
    r.p = idx(rng);
    do r.q = idx(rng);
    while (r.q == r.p);
    r.t = Rational(num(rng), den(rng));
    r.u = Rational(num(rng), den(rng));
    r.t.canonicalize();
    r.u.canonicalize();
    out.push_back(r);
  }
  return out;
}

ComplexMatrix<double> to_double(const ComplexMatrix<Rational>& m) {
  ComplexMatrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex<double>(m(i, j).re.get_d(), m(i, j).im.get_d());
  return out;
}

}  // namespace psdcert::gen
