#pragma once

// Deliberately naive reference computations. None of them share code with the
// library algorithms they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <vector>

#include "specvar/linalg.hpp"

namespace oracle {

using specvar::ComplexMatrix;
using specvar::cplx;

// Largest singular value from power iteration on M^H M.
inline double power_iteration_norm(const ComplexMatrix& m, int iters = 20000) {
  const std::size_t n = m.dim();
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = cplx(1.0 + 0.1 * i, 0.05 * i);
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    std::vector<cplx> w(n), u(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j) * v[j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u[i] += std::conj(m(j, i)) * w[j];
    double nu = 0.0;
    for (const auto& x : u) nu += std::norm(x);
    nu = std::sqrt(nu);
    if (nu == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / nu;
    if (std::abs(nu - lambda) <= 1e-15 * nu) {
      lambda = nu;
      break;
    }
    lambda = nu;
  }
  return std::sqrt(lambda);
}

// Characteristic polynomial coefficients c[0..n] (monic, c[n] = 1) by
// Faddeev-LeVerrier.
inline std::vector<cplx> char_poly(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<cplx> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    const ComplexMatrix am = a * mk;
    cplx tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<double>(k);
  }
  return c;
}

// Roots of a monic polynomial by Durand-Kerner iteration.
inline std::vector<cplx> poly_roots(const std::vector<cplx>& c) {
  const std::size_t n = c.size() - 1;
  auto p = [&](cplx z) {
    cplx acc = c[n];
    for (std::size_t i = n; i-- > 0;) acc = acc * z + c[i];
    return acc;
  };
  std::vector<cplx> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::pow(cplx(0.4, 0.9), static_cast<double>(i));
  for (int it = 0; it < 5000; ++it) {
    double move = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= r[i] - r[j];
      const cplx step = p(r[i]) / den;
      r[i] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-16) break;
  }
  return r;
}

// Bottleneck value by enumerating all permutations.
inline double brute_bottleneck(std::size_t n, const std::function<double(std::size_t, std::size_t)>& cost) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = INFINITY;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, cost(i, perm[i]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Golden-section minimizer on [lo, hi].
inline double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-13) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

inline double pdist(cplx a, cplx b) { return std::abs((a - b) / (1.0 - std::conj(a) * b)); }

// Partial sums with a fixed number of terms.
inline double theta2_partial(double q, int terms) {
  double s = 0.0;
  for (int k = 0; k < terms; ++k) s += 2.0 * std::pow(q, (k + 0.5) * (k + 0.5));
  return s;
}

inline double theta3_partial(double q, int terms) {
  double s = 1.0;
  for (int k = 1; k < terms; ++k) s += 2.0 * std::pow(q, static_cast<double>(k) * k);
  return s;
}

// Dense uniform grid maximum of |f| on [lo, hi].
inline double grid_max(const std::function<double(double)>& f, double lo, double hi, int points) {
  double best = 0.0;
  for (int i = 0; i < points; ++i) best = std::max(best, f(lo + (hi - lo) * i / (points - 1.0)));
  return best;
}

}  // namespace oracle
