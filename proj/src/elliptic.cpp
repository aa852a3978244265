#include "specvar/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specvar/error.hpp"

namespace specvar {

namespace {

constexpr int kMaxSeriesTerms = 100000;
constexpr long kMaxProductFactors = 10'000'000;
constexpr double kTermFloor = 1e-17;
// Below this nome k(q) = 4 sqrt(q) (1 - 4q + ...) is exact in double.
constexpr double kTinyNome = 1e-20;

void check_series_domain(double q) {
  if (!(q >= 0.0)) throw OutOfDomain("nome must be non-negative");
  if (q > kNomeMax) {
    throw DomainOverflow("nome " + std::to_string(q) + " exceeds 1 - 1e-8");
  }
}

// sum_{k>=0} q^{(k+offset)^2}, stopping once a term is negligible.
double half_series(double q, double offset) {
  const double lq = std::log(q);
  double sum = 0.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double e = (k + offset) * (k + offset);
    const double term = std::exp(e * lq);
    if (k > 0 && term <= kTermFloor * sum) return sum;
    sum += term;
  }
  throw DomainOverflow("theta series did not converge within term cap");
}

}  // namespace

double theta2(double q) {
  check_series_domain(q);
  if (q == 0.0) return 0.0;
  return 2.0 * half_series(q, 0.5);
}

double theta3(double q) {
  check_series_domain(q);
  if (q == 0.0) return 1.0;
  return 2.0 * half_series(q, 0.0) - 1.0;
}

double modulus_k(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw OutOfDomain("nome must lie in [0, 1]");
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;
  const double ratio = theta2(q) / theta3(q);
  return std::min(1.0, ratio * ratio);
}

double modulus_k_product(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw OutOfDomain("nome must lie in [0, 1]");
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;
  if (q > kNomeMax) throw DomainOverflow("nome exceeds 1 - 1e-8");
  const double lq = std::log(q);
  double log_prod = 0.0;
  for (long j = 1;; ++j) {
    if (j > kMaxProductFactors) {
      throw DomainOverflow("product representation needs more than 1e7 factors");
    }
    const double odd = std::exp((2.0 * j - 1.0) * lq);
    if (odd < kTermFloor) break;
    const double even = odd * q;
    log_prod += std::log1p(even) - std::log1p(odd);
  }
  return std::min(1.0, 4.0 * std::exp(0.5 * lq + 4.0 * log_prod));
}

double modulus_k_from_log(double log_q) {
  if (!(log_q <= 0.0)) throw OutOfDomain("log nome must be non-positive");
  if (log_q < std::log(kTinyNome)) return 4.0 * std::exp(0.5 * log_q);
  return modulus_k(std::exp(log_q));
}

double log_inverse_k(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw OutOfDomain("modulus must lie in [0, 1]");
  if (x == 0.0) return -INFINITY;
  if (x == 1.0) return 0.0;
  // k(q) = 4 sqrt(q) to double precision for q below 1e-20, i.e. x < 4e-10.
  if (x < 4.0 * std::sqrt(kTinyNome)) return 2.0 * std::log(x / 4.0);

  double lo = kTinyNome;  // k(lo) < 4e-10 < x
  double hi = kNomeMax;   // k(hi) rounds to 1 >= x
  for (int it = 0; it < 2000; ++it) {
    const double mid = hi > 4.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (modulus_k(mid) < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::log(hi);
}

double inverse_k(double x) {
  const double lq = log_inverse_k(x);
  return std::isinf(lq) ? 0.0 : std::exp(lq);
}

ModulusPowerPair modulus_power_pair(double q, int n) {
  if (n < 1) throw InvalidInputs("power must be at least 1");
  if (!(q >= 0.0 && q <= kNomeMax)) throw OutOfDomain("nome must lie in [0, 1 - 1e-8]");
  if (q == 0.0) return {0.0, 0.0};
  const double kq = modulus_k(q);
  const double qn = std::pow(q, n);
  const double kqn = qn > 1e-300 ? modulus_k(qn) : modulus_k_from_log(n * std::log(q));
  const double lhs = std::sqrt(kqn);
  const double rhs = std::exp((1.0 - n) * std::log(2.0) + 0.5 * n * std::log(kq));
  return {lhs, rhs};
}

}  // namespace specvar
