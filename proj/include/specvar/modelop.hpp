#pragma once

#include <span>
#include <vector>

#include "specvar/linalg.hpp"

namespace specvar {

/// Lower-triangular contraction built from a zero multiset:
///   (M)_ij = 0                                                   i < j
///          = l_i                                                 i = j
///          = sqrt(1-|l_i|^2) sqrt(1-|l_j|^2) prod_{j<mu<i} (-conj l_mu)   i > j
struct ModelMatrix {
  std::vector<cplx> zeros;
  ComplexMatrix matrix;
};

/// Throws InvalidSpectrum when the list is empty or a zero has modulus above
/// 1 + 1e-14.
ModelMatrix build_model_matrix(std::span<const cplx> zeros);

/// prod 1/|l_i|, +inf when some zero vanishes. Bounds ||X^{-1}|| for every
/// contraction X whose minimal polynomial has these zeros.
double inverse_norm_bound(std::span<const cplx> zeros);

/// prod |1 - conj(l_i) z| / |z - l_i|. Bounds ||(zI - A)^{-1} (I - conj(z) A)||
/// for contractions A with these zeros. Throws PoleEvaluation when z is within
/// 1e-14 of a zero, OutOfDomain for |z| > 1.
double mobius_resolvent_bound(std::span<const cplx> zeros, cplx z);

/// Rational function num(z) / den(z); coefficients in ascending powers.
struct RationalFunction {
  std::vector<cplx> numerator;
  std::vector<cplx> denominator{cplx(1.0)};

  cplx operator()(cplx z) const;
  /// Roots of the denominator (empty for constants).
  std::vector<cplx> poles() const;
};

/// Horner evaluation of sum_k c_k X^k.
ComplexMatrix polynomial_of(const ComplexMatrix& x, std::span<const cplx> coeffs);

/// den(X)^{-1} num(X). Throws PoleEvaluation when den(X) is singular or its
/// condition number exceeds 1e12.
ComplexMatrix rational_of(const ComplexMatrix& x, const RationalFunction& psi);

struct DominanceCheck {
  double lhs_norm = 0.0;  ///< ||psi(A)||
  double rhs_norm = 0.0;  ///< ||psi(M_m)||
  bool holds = false;     ///< lhs <= rhs + 1e-8
};

/// Compares ||psi(A)|| with ||psi(M_m)|| for the model matrix of `zeros`.
/// Throws NotAContraction when ||A|| > 1 + 1e-12 and PoleEvaluation when a
/// pole of psi lies within 1e-6 of a zero.
DominanceCheck rational_dominance_check(const ComplexMatrix& a, std::span<const cplx> zeros,
                                        const RationalFunction& psi);

}  // namespace specvar
