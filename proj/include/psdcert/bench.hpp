#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "psdcert/tolerance.hpp"

namespace psdcert::bench {

struct BenchConfig {
  std::size_t dim_lo = 2;
  std::size_t dim_hi = 8;
  std::size_t batch = 100;
  std::uint64_t seed = 1;
  ToleranceConfig tolerances;
  /// |lambda_min| <= oracle_band * ||A||_F marks an item as in-band.
  double oracle_band = 1e-7;
};

struct BenchRow {
  std::size_t dim = 0;
  std::size_t batch = 0;
  double hurwitz_median_us = 0.0;
  double jacobi_median_us = 0.0;
  std::size_t decided = 0;          // items outside the band
  std::size_t agreed = 0;           // ... whose verdict matches sign(lambda_min)
  std::size_t in_band = 0;
  std::size_t in_band_boundary = 0;  // ... reported as Boundary
  std::size_t boundary = 0;          // Boundary verdicts overall

  double agreement() const { return decided == 0 ? 1.0 : static_cast<double>(agreed) / static_cast<double>(decided); }
};

/// Times the Hurwitz certificate against the Jacobi eigensolver on a seeded
/// batch per dimension (random Hermitian, Gram and rank-deficient Gram
/// matrices in rotation) and records verdict agreement.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

}  // namespace psdcert::bench
