#pragma once

namespace specvar {

/// Largest nome accepted by the series evaluations.
inline constexpr double kNomeMax = 1.0 - 1e-8;

/// theta_2(q) = sum_{k in Z} q^{(k+1/2)^2}. Throws DomainOverflow for q > kNomeMax
/// and OutOfDomain for q < 0.
double theta2(double q);

/// theta_3(q) = sum_{k in Z} q^{k^2}. Same domain as theta2.
double theta3(double q);

/// Elliptic modulus k(q) = (theta_2 / theta_3)^2 on [0, 1], extended by
/// k(0) = 0 and k(1) = 1. Nomes in (kNomeMax, 1) throw DomainOverflow.
double modulus_k(double q);

/// k(q) = 4 sqrt(q) prod_{j>=1} ((1 + q^{2j}) / (1 + q^{2j-1}))^4, evaluated
/// in the log domain. Independent of the theta series route.
double modulus_k_product(double q);

/// The unique q in [0, 1] with modulus_k(q) = x. Monotone bisection, first
/// geometric (so tiny x keep full relative precision) then arithmetic.
double inverse_k(double x);

/// Natural log of inverse_k(x), finite even when inverse_k(x) underflows.
double log_inverse_k(double x);

/// k(exp(log_q)) for log_q <= 0, using the small-nome expansion
/// k ~ 4 sqrt(q) where q itself would underflow.
double modulus_k_from_log(double log_q);

struct ModulusPowerPair {
  double lhs;  ///< sqrt(k(q^n))
  double rhs;  ///< 2^{1-n} k(q)^{n/2}
};

/// Both sides of the inequality sqrt(k(q^n)) >= 2^{1-n} k(q)^{n/2}.
ModulusPowerPair modulus_power_pair(double q, int n);

}  // namespace specvar
