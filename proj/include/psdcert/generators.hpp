#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "psdcert/matrix.hpp"

// Seeded matrix families shared by the bench and the test suites.

namespace psdcert::gen {

using Rng = std::mt19937_64;

/// Hermitian matrix with real and imaginary parts uniform in [-bound, bound].
ComplexMatrix<double> random_hermitian(std::size_t n, Rng& rng, double bound = 10.0);

/// B B* for an n x rank complex B, rescaled so the largest entry has
/// magnitude `bound`. PSD, and singular when rank < n.
ComplexMatrix<double> random_gram(std::size_t n, std::size_t rank, Rng& rng, double bound = 10.0);

enum class Family { Hermitian, Gram, RankDeficientGram };

/// Cycles through the families by index so every batch mixes them.
ComplexMatrix<double> mixed_family(std::size_t n, std::size_t index, Rng& rng);

/// Hermitian matrix with integer real/imaginary parts in [-bound, bound]
/// (diagonal real).
ComplexMatrix<Rational> random_integer_hermitian(std::size_t n, Rng& rng, int bound = 2);

/// Unitary with entries in Q(i): a product of plane rotations with
/// c = (1 - t^2)/(1 + t^2), s = 2t/(1 + t^2), each preceded by a phase
/// ((1 - u^2) + 2ui)/(1 + u^2) on the second coordinate.
struct PlaneRotation {
  std::size_t p = 0, q = 1;
  Rational t;  // rotation parameter
  Rational u;  // phase parameter; 0 keeps the rotation real
};

ComplexMatrix<Rational> rational_unitary(std::size_t n, const std::vector<PlaneRotation>& rotations);

/// Q diag(spectrum) Q*.
ComplexMatrix<Rational> conjugate_diagonal(const ComplexMatrix<Rational>& q, const std::vector<Rational>& spectrum);

/// Random rotations with small rational parameters.
std::vector<PlaneRotation> random_rotations(std::size_t n, std::size_t count, Rng& rng);

/// Converts an exact matrix to binary64.
ComplexMatrix<double> to_double(const ComplexMatrix<Rational>& m);

}  // namespace psdcert::gen
