#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "specvar/linalg.hpp"
#include "specvar/random.hpp"

namespace specvar {

// ---------------------------------------------------------------------------
// Matrix ensembles

/// Ginibre draw rescaled so that op_norm equals target_norm (in (0, 1]).
ComplexMatrix random_contraction(std::size_t n, double target_norm, Rng& rng);
ComplexMatrix random_contraction(std::size_t n, double target_norm, std::uint64_t seed);

/// Contraction with exactly the given spectrum: upper-triangular T with the
/// zeros on the diagonal and a Ginibre strict upper part scaled by the largest
/// beta in (0, 1] keeping ||T|| <= 1 - 1e-10, then conjugated by a random
/// unitary. Requires max |zero| <= 1 - 1e-10.
ComplexMatrix prescribed_spectrum_contraction(std::span<const cplx> zeros, Rng& rng);

/// E = eps G / ||G|| for a Ginibre G, so ||E|| = eps.
ComplexMatrix random_perturbation(std::size_t n, double eps, Rng& rng);

// ---------------------------------------------------------------------------
// Eigenvalue curves of A_t = (1 - t) A + t B

struct CurveFamily {
  std::vector<double> t;                   ///< 0 = t_0 < ... < t_K = 1
  std::vector<std::vector<cplx>> points;   ///< points[step][curve]
  double delta = 0.0;                      ///< continuity threshold used

  std::size_t curve_count() const { return points.empty() ? 0 : points.front().size(); }
  std::vector<cplx> curve(std::size_t k) const;
  /// Largest step-to-step displacement along any curve.
  double max_step() const;
};

/// 0.01 * diameter of sigma(A) u sigma(B), floored at 1e-6.
double default_curve_delta(const Spectrum& sa, const Spectrum& sb);

/// Starts from 64 uniform steps and bisects any interval whose endpoint
/// spectra are further apart than delta (bottleneck distance), up to 2^16
/// steps. Consecutive spectra are linked by the bottleneck-optimal
/// permutation. Throws CurveResolutionFailure naming the offending interval.
CurveFamily trace_curves(const ComplexMatrix& a, const ComplexMatrix& b, double delta);

struct CurveCheck {
  cplx start;
  cplx end;
  double lower = 0.0;    ///< sqrt(k(q^{2m})) with k(q) = p(start, end)
  double sampled_max = 0.0;
  double slack = 0.0;    ///< sampled_max - lower
  bool pass = true;
};

struct CurveInterpolationReport {
  std::vector<CurveCheck> curves;
  std::size_t violations = 0;
  std::size_t skipped_samples = 0;  ///< samples within 1e-14 of the boundary
  double min_slack = 0.0;
};

/// Instantiates the curve interpolation lower bound on traced curves: along
/// each curve from a to b, max_t prod |(z - l_i) / (1 - conj(l_i) z)| over the
/// zeros must reach sqrt(k(q^{2m})) - 1e-8. Throws InvalidInputs unless
/// zeros.size() == m.
CurveInterpolationReport curve_interpolation_check(const CurveFamily& family,
                                                   std::span<const cplx> zeros, int m);

}  // namespace specvar
