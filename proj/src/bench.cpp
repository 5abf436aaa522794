#include "psdcert/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "psdcert/criteria.hpp"
#include "psdcert/generators.hpp"
#include "psdcert/oracle.hpp"

namespace psdcert::bench {

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <class Fn>
double time_us(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(t1 - t0).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  require(cfg.dim_lo >= 1 && cfg.dim_lo <= cfg.dim_hi, "bench: need 1 <= dim_lo <= dim_hi");
  require(cfg.batch >= 1, "bench: batch must be >= 1");
  std::vector<BenchRow> rows;
  for (std::size_t n = cfg.dim_lo; n <= cfg.dim_hi; ++n) {
    gen::Rng rng(cfg.seed * 1000003u + n);
    BenchRow row;
    row.dim = n;
    row.batch = cfg.batch;
    std::vector<double> th, tj;
    for (std::size_t i = 0; i < cfg.batch; ++i) {
      const HermitianMatrix<double> a = validate_hermitian(gen::mixed_family(n, i, rng), cfg.tolerances);
      PositivityCertificate<double> cert;
      oracle::Spectrum spectrum;
      th.push_back(time_us([&] { cert = is_positive_operator(a, cfg.tolerances); }));
      tj.push_back(time_us([&] { spectrum = oracle::jacobi_eigenvalues(a, cfg.tolerances); }));
      const double lmin = spectrum.eigenvalues.front();
      if (cert.verdict == Positivity::Boundary) ++row.boundary;
      if (std::fabs(lmin) <= cfg.oracle_band * frobenius_norm(a)) {
        ++row.in_band;
        if (cert.verdict == Positivity::Boundary) ++row.in_band_boundary;
      } else {
        ++row.decided;
        const bool agree = (lmin > 0 && cert.verdict == Positivity::Positive) ||
                           (lmin < 0 && cert.verdict == Positivity::NotPositive);
        if (agree) ++row.agreed;
      }
    }
    row.hurwitz_median_us = median(th);
    row.jacobi_median_us = median(tj);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace psdcert::bench
