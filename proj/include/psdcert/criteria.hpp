#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psdcert/linalg.hpp"
#include "psdcert/poly.hpp"
#include "psdcert/tolerance.hpp"

namespace psdcert {

/// Sign convention sigma_k applied to Delta_k before testing positivity.
enum class SignRule {
  /// sigma_k = +1: roots in the open left half-plane.
  Identity,
  /// sigma_k = (-1)^ceil(k/2): nonzero roots in the open right half-plane.
  /// A k x k Hurwitz matrix has ceil(k/2) rows of odd-index coefficients,
  /// and reflection z -> -z negates exactly those rows.
  CeilHalf,
  /// sigma_k = (-1)^(1 + floor(k/2)). Agrees with CeilHalf for odd k only;
  /// kept so tests can show where it goes wrong.
  OnePlusFloorHalf,
};

int sign_factor(SignRule rule, std::size_t k);
std::string_view to_string(SignRule rule);

enum class VerdictKind { Satisfied, Violated, Boundary };
std::string_view to_string(VerdictKind kind);

/// Violated and Boundary carry a 1-based witness index; Satisfied does not.
struct Verdict {
  VerdictKind kind = VerdictKind::Satisfied;
  std::optional<std::size_t> witness;
  std::string notes;
};

template <class T>
struct CriterionResult {
  ZeroRootAnalysis<T> zeros;
  HurwitzReport<T> hurwitz;
  Verdict verdict;
};

/// Evaluates sigma_k Delta_k > 0 for k = 1..n - n0.
///
/// Exact: strict comparisons; Delta_k = 0 is a violation. Float: the
/// polynomial is rescaled to unit root scale and each Delta_k gets an
/// uncertainty from its cofactors, assuming every root may move by
/// boundary_band (relative) plus the per-coefficient rounding noise. A
/// determinant inside its uncertainty is undecided. Any clearly failing
/// index gives Violated. So does an undecided index when some coefficient
/// of the half-plane polynomial is clearly negative, since all Delta_k > 0
/// would force every coefficient positive. Otherwise any undecided index,
/// or a zero root absorbed by thresholding, gives Boundary.
template <class T>
CriterionResult<T> evaluate_hurwitz_conditions(const RealPolynomial<T>& p, const ToleranceConfig& cfg, bool deflate,
                                               SignRule rule, const std::vector<double>& noise = {});

/// All roots have negative real part iff Delta_k > 0 for k = 1..n.
template <class T>
Verdict routh_hurwitz_stable(const RealPolynomial<T>& p, const ToleranceConfig& cfg = {});

/// Nonzero roots have negative real part iff Delta_k > 0 for k = 1..n - n0.
template <class T>
CriterionResult<T> extended_rh(const RealPolynomial<T>& p, const ToleranceConfig& cfg = {});

/// Nonzero roots have positive real part iff sigma_k Delta_k > 0 for
/// k = 1..n - n0; with the zero roots, all roots have Re >= 0.
template <class T>
CriterionResult<T> symmetric_rh(const RealPolynomial<T>& p, const ToleranceConfig& cfg = {},
                                SignRule rule = SignRule::CeilHalf);

enum class Positivity { Positive, NotPositive, Boundary };
std::string_view to_string(Positivity v);

/// Which characteristic-polynomial construction fed the decision.
enum class CharpolyRoute { Minors, Traces };
std::string_view to_string(CharpolyRoute r);

template <class T>
struct PositivityCertificate {
  Positivity verdict = Positivity::Boundary;
  std::size_t n = 0;
  std::size_t n0 = 0;
  RealPolynomial<T> charpoly{std::vector<T>{T(1)}};
  HurwitzReport<T> hurwitz;
  Regime regime = ScalarTraits<T>::regime;
  ToleranceConfig tolerances;
  SignRule sign_rule = SignRule::CeilHalf;
  CharpolyRoute route = CharpolyRoute::Minors;
  bool routes_cross_checked = false;
  /// Largest |b_k(traces) - b_k(minors)| / coefficient_scale; 0 when exact.
  double construction_discrepancy = 0.0;
  std::optional<std::size_t> witness;
  std::string notes;
};

struct PipelineOptions {
  /// Above this dimension only the trace construction runs.
  std::size_t minors_max_dim = 12;
};

/// Decides positive semidefiniteness of a Hermitian matrix from the Hurwitz
/// determinants of its characteristic polynomial, without eigenvalues.
/// Throws ConstructionMismatch when the two constructions disagree.
/// In the float regime a zero eigenvalue (n0 > 0) yields Boundary, never
/// Positive; the exact regime certifies singular matrices.
template <class T>
PositivityCertificate<T> is_positive_operator(const HermitianMatrix<T>& a, const ToleranceConfig& cfg = {},
                                              const PipelineOptions& opts = {});

struct ClosedFormVerdict {
  Verdict verdict;
  std::size_t n0 = 0;
};

/// n = 2: positive iff (det = 0 and tr >= 0) or (det > 0 and tr > 0).
/// Comparisons are literal in both regimes. Throws WrongDimension.
template <class T>
ClosedFormVerdict positivity_2x2(const HermitianMatrix<T>& a);

/// n = 3 from b1 = -tr A, b2 = (tr(A)^2 - tr(A^2))/2, b3 = -det A. Exact
/// inputs go through the explicit n0 = 0..3 case split; float inputs use
/// the banded determinant test on the same coefficients.
template <class T>
ClosedFormVerdict positivity_3x3(const HermitianMatrix<T>& a, const ToleranceConfig& cfg = {});

}  // namespace psdcert
