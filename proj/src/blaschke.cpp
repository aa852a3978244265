#include "specvar/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "specvar/elliptic.hpp"
#include "specvar/error.hpp"
#include "specvar/random.hpp"

namespace specvar {

namespace {

constexpr int kGridPoints = 2049;
constexpr int kRefinedPeaks = 8;
constexpr double kGolden = 0.6180339887498949;

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  double a = lo;
  double b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  double best = std::max({f(lo), f(hi), f1, f2});
  while (b - a > 1e-13) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

// Minimizes f over R^d from x0 with initial simplex edge `step`.
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, double step, int max_evals) {
  const std::size_t d = x0.size();
  std::vector<std::vector<double>> simplex(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) simplex[i + 1][i] += step;
  std::vector<double> fv(d + 1);
  int evals = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    fv[i] = f(simplex[i]);
    ++evals;
  }
  std::vector<std::size_t> order(d + 1);
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[d > 0 ? d - 1 : 0];
    if (std::abs(fv[worst] - fv[best]) <= 1e-14 * (1.0 + std::abs(fv[best]))) break;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[i][k] / static_cast<double>(d);
    }
    auto along = [&](double t) {
      std::vector<double> p(d);
      for (std::size_t k = 0; k < d; ++k) p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
      return p;
    };
    auto reflected = along(-1.0);
    const double fr = f(reflected);
    ++evals;
    if (fr < fv[best]) {
      auto expanded = along(-2.0);
      const double fe = f(expanded);
      ++evals;
      if (fe < fr) {
        simplex[worst] = std::move(expanded);
        fv[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      simplex[worst] = std::move(reflected);
      fv[worst] = fr;
    } else {
      auto contracted = fr < fv[worst] ? along(-0.5) : along(0.5);
      const double fc = f(contracted);
      ++evals;
      if (fc < std::min(fr, fv[worst])) {
        simplex[worst] = std::move(contracted);
        fv[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= d; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < d; ++k)
            simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
          fv[i] = f(simplex[i]);
          ++evals;
        }
      }
    }
  }
  const auto it = std::min_element(fv.begin(), fv.end());
  return simplex[static_cast<std::size_t>(it - fv.begin())];
}

BlaschkeProduct real_product(const std::vector<double>& zeros) {
  std::vector<cplx> z(zeros.begin(), zeros.end());
  return BlaschkeProduct(std::move(z));
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros) : zeros_(std::move(zeros)) {
  for (const auto& l : zeros_) {
    if (!(std::abs(l) <= 1.0 + 1e-14)) throw InvalidSpectrum("Blaschke zero outside the closed disk");
  }
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx value = 1.0;
  for (const auto& l : zeros_) {
    const cplx den = 1.0 - std::conj(l) * z;
    if (std::abs(den) < 1e-15) throw PoleEvaluation("evaluation at a pole of the Blaschke product");
    value *= (z - l) / den;
  }
  return value;
}

cplx eval(const BlaschkeProduct& b, cplx z) { return b(z); }

double max_abs_on_segment(const BlaschkeProduct& b, double lo, double hi) {
  if (!(lo <= hi) || lo < -1.0 || hi > 1.0) {
    throw OutOfDomain("segment must satisfy -1 <= lo <= hi <= 1");
  }
  if (b.degree() == 0) return 1.0;
  const auto f = [&b](double t) { return std::abs(b(cplx(t, 0.0))); };
  if (lo == hi) return f(lo);

  const double h = (hi - lo) / (kGridPoints - 1);
  std::vector<double> vals(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) vals[i] = f(i == kGridPoints - 1 ? hi : lo + i * h);

  std::vector<int> peaks;
  for (int i = 0; i < kGridPoints; ++i) {
    const bool left = i == 0 || vals[i] >= vals[i - 1];
    const bool right = i == kGridPoints - 1 || vals[i] >= vals[i + 1];
    if (left && right) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int c) { return vals[a] > vals[c]; });
  if (peaks.size() > kRefinedPeaks) peaks.resize(kRefinedPeaks);

  double best = *std::max_element(vals.begin(), vals.end());
  for (const int i : peaks) {
    const double a = std::max(lo, lo + (i - 1) * h);
    const double c = std::min(hi, lo + (i + 1) * h);
    best = std::max(best, golden_max(f, a, c));
  }
  return best;
}

double cheb_blaschke_value(double q, int n) {
  if (n < 1) throw InvalidInputs("degree must be at least 1");
  return modulus_power_pair(q, n).lhs;
}

double cheb_poly_lower_bound(cplx a, cplx b, int n) {
  if (n < 1) throw InvalidInputs("degree must be at least 1");
  return std::exp(n * std::log(std::abs(b - a)) - (2.0 * n - 1.0) * std::log(2.0));
}

MinimaxSearch search_minimax_candidates(int n, double half_width, int random_draws, int restarts,
                                        std::uint64_t seed) {
  if (n < 1) throw InvalidInputs("degree must be at least 1");
  if (!(half_width >= 0.0 && half_width <= 1.0)) throw OutOfDomain("half width must lie in [0, 1]");
  Rng rng(seed);
  MinimaxSearch out;
  out.best_random.max_abs = INFINITY;
  out.best_refined.max_abs = INFINITY;

  auto score = [&](const std::vector<double>& zeros) {
    return max_abs_on_segment(real_product(zeros), -half_width, half_width);
  };

  for (int i = 0; i < random_draws; ++i) {
    std::vector<double> zeros(n);
    for (auto& z : zeros) z = rng.uniform(-1.0, 1.0) * 0.999;
    const double m = score(zeros);
    out.all_maxima.push_back(m);
    if (m < out.best_random.max_abs) out.best_random = {zeros, m};
  }

  // Optimize in u-space, zero = tanh(u), which keeps zeros inside (-1, 1).
  auto objective = [&](const std::vector<double>& u) {
    std::vector<double> zeros(u.size());
    std::transform(u.begin(), u.end(), zeros.begin(), [](double x) { return std::tanh(x); });
    return score(zeros);
  };
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> u0(n);
    if (r == 0) {
      // Spread start: zeros evenly across the segment.
      for (int i = 0; i < n; ++i) {
        const double z = half_width * (n == 1 ? 0.0 : -1.0 + 2.0 * i / (n - 1.0)) * 0.9;
        u0[i] = std::atanh(std::clamp(z, -0.999, 0.999));
      }
    } else {
      for (auto& u : u0) u = std::atanh(rng.uniform(-0.95, 0.95) * half_width);
    }
    const auto u = nelder_mead(objective, u0, 0.2, 600);
    std::vector<double> zeros(u.size());
    std::transform(u.begin(), u.end(), zeros.begin(), [](double x) { return std::tanh(x); });
    const double m = score(zeros);
    out.all_maxima.push_back(m);
    if (m < out.best_refined.max_abs) out.best_refined = {zeros, m};
  }
  return out;
}

}  // namespace specvar
