#include "specvar/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "specvar/elliptic.hpp"
#include "specvar/error.hpp"
#include "specvar/hypgeo.hpp"
#include "specvar/matching.hpp"

namespace specvar {

ComplexMatrix random_contraction(std::size_t n, double target_norm, Rng& rng) {
  if (!(target_norm > 0.0 && target_norm <= 1.0)) {
    throw InvalidInputs("target norm must lie in (0, 1]");
  }
  ComplexMatrix g = ginibre(n, rng);
  const double s = op_norm(g);
  g *= target_norm / s;
  return g;
}

ComplexMatrix random_contraction(std::size_t n, double target_norm, std::uint64_t seed) {
  Rng rng(seed);
  return random_contraction(n, target_norm, rng);
}

ComplexMatrix prescribed_spectrum_contraction(std::span<const cplx> zeros, Rng& rng) {
  const std::size_t n = zeros.size();
  if (n == 0) throw InvalidSpectrum("need at least one eigenvalue");
  constexpr double kTarget = 1.0 - 1e-10;
  for (const auto& z : zeros) {
    if (!(std::abs(z) <= kTarget)) throw InvalidSpectrum("eigenvalue too close to the unit circle");
  }
  ComplexMatrix diag = ComplexMatrix::diagonal(zeros);
  ComplexMatrix upper(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = rng.complex_normal();

  auto with_beta = [&](double beta) { return diag + cplx(beta) * upper; };
  double beta = 1.0;
  if (op_norm(with_beta(1.0)) > kTarget) {
    // ||D + beta U|| is convex in beta and below target at 0.
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (op_norm(with_beta(mid)) <= kTarget ? lo : hi) = mid;
    }
    beta = lo;
  }
  const ComplexMatrix u = random_unitary(n, rng);
  return u * with_beta(beta) * adjoint(u);
}

ComplexMatrix random_perturbation(std::size_t n, double eps, Rng& rng) {
  if (!(eps >= 0.0)) throw InvalidInputs("perturbation size must be non-negative");
  ComplexMatrix g = ginibre(n, rng);
  g *= eps / op_norm(g);
  return g;
}

std::vector<cplx> CurveFamily::curve(std::size_t k) const {
  std::vector<cplx> out;
  out.reserve(points.size());
  for (const auto& step : points) out.push_back(step.at(k));
  return out;
}

double CurveFamily::max_step() const {
  double worst = 0.0;
  for (std::size_t s = 1; s < points.size(); ++s)
    for (std::size_t k = 0; k < points[s].size(); ++k)
      worst = std::max(worst, std::abs(points[s][k] - points[s - 1][k]));
  return worst;
}

double default_curve_delta(const Spectrum& sa, const Spectrum& sb) {
  std::vector<cplx> all(sa);
  all.insert(all.end(), sb.begin(), sb.end());
  double diam = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) diam = std::max(diam, std::abs(all[i] - all[j]));
  return std::max(1e-6, 0.01 * diam);
}

CurveFamily trace_curves(const ComplexMatrix& a, const ComplexMatrix& b, double delta) {
  if (a.dim() != b.dim()) throw SizeMismatch("A and B have different dimensions");
  if (!(delta > 0.0)) throw InvalidInputs("continuity threshold must be positive");
  constexpr std::size_t kInitialSteps = 64;
  constexpr std::size_t kMaxSteps = std::size_t{1} << 16;

  auto spectrum_at = [&](double t) {
    if (t == 0.0) return eigenvalues(a);
    if (t == 1.0) return eigenvalues(b);
    return eigenvalues(cplx(1.0 - t) * a + cplx(t) * b);
  };

  struct Sample {
    double t;
    Spectrum s;
  };
  std::vector<Sample> samples;
  for (std::size_t i = 0; i <= kInitialSteps; ++i) {
    const double t = static_cast<double>(i) / kInitialSteps;
    samples.push_back({t, spectrum_at(t)});
  }

  // Depth-first refinement keeps the samples sorted in t.
  std::vector<Sample> refined{samples.front()};
  std::vector<Sample> stack;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    stack.push_back(samples[i]);
    while (!stack.empty()) {
      const Sample& left = refined.back();
      const Sample& right = stack.back();
      if (d_euclid(left.s, right.s) <= delta) {
        refined.push_back(right);
        stack.pop_back();
        continue;
      }
      if (refined.size() + stack.size() > kMaxSteps || right.t - left.t < 1e-15) {
        std::ostringstream os;
        os.precision(17);
        os << "interval [" << left.t << ", " << right.t << "] still exceeds delta=" << delta;
        throw CurveResolutionFailure(os.str());
      }
      const double mid = 0.5 * (left.t + right.t);
      stack.push_back({mid, spectrum_at(mid)});
    }
  }

  CurveFamily fam;
  fam.delta = delta;
  fam.t.reserve(refined.size());
  fam.points.reserve(refined.size());
  fam.t.push_back(refined.front().t);
  fam.points.push_back(refined.front().s);
  for (std::size_t s = 1; s < refined.size(); ++s) {
    const auto& prev = fam.points.back();
    const auto& next = refined[s].s;
    const auto match = bottleneck_assignment(CostMatrix::euclidean(prev, next));
    std::vector<cplx> linked(prev.size());
    for (std::size_t k = 0; k < prev.size(); ++k) linked[k] = next[match.permutation[k]];
    fam.t.push_back(refined[s].t);
    fam.points.push_back(std::move(linked));
  }
  return fam;
}

CurveInterpolationReport curve_interpolation_check(const CurveFamily& family,
                                                   std::span<const cplx> zeros, int m) {
  if (m < 1 || zeros.size() != static_cast<std::size_t>(m)) {
    throw InvalidInputs("zero list must contain exactly m entries");
  }
  CurveInterpolationReport rep;
  rep.min_slack = INFINITY;
  for (std::size_t k = 0; k < family.curve_count(); ++k) {
    CurveCheck c;
    c.start = family.points.front()[k];
    c.end = family.points.back()[k];
    const double p = pseudo_distance(c.start, c.end);
    if (p > 0.0) {
      const double log_q = log_inverse_k(p);
      c.lower = std::sqrt(modulus_k_from_log(std::max(-1e300, 2.0 * m * log_q)));
    }
    double best = 0.0;
    for (const auto& step : family.points) {
      const cplx z = step[k];
      if (std::abs(z) >= 1.0 - kBoundaryTol) {
        ++rep.skipped_samples;
        continue;
      }
      double prod = 1.0;
      for (const auto& l : zeros) prod *= std::abs(z - l) / std::abs(1.0 - std::conj(l) * z);
      best = std::max(best, prod);
    }
    c.sampled_max = best;
    c.slack = best - c.lower;
    c.pass = best >= c.lower - 1e-8;
    if (!c.pass) ++rep.violations;
    rep.min_slack = std::min(rep.min_slack, c.slack);
    rep.curves.push_back(c);
  }
  return rep;
}

}  // namespace specvar
