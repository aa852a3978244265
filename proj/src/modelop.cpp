#include "specvar/modelop.hpp"

#include <cmath>

#include "specvar/error.hpp"

namespace specvar {

ModelMatrix build_model_matrix(std::span<const cplx> zeros) {
  if (zeros.empty()) throw InvalidSpectrum("model matrix needs at least one zero");
  const std::size_t m = zeros.size();
  std::vector<double> defect(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double r = std::abs(zeros[i]);
    if (!(r <= 1.0 + 1e-14)) throw InvalidSpectrum("zero outside the closed unit disk");
    defect[i] = std::sqrt(std::max(0.0, 1.0 - r * r));
  }
  ComplexMatrix mat(m);
  for (std::size_t j = 0; j < m; ++j) {
    mat(j, j) = zeros[j];
    // Walk down column j, extending the product over mu = j+1 .. i-1.
    cplx chain = 1.0;
    for (std::size_t i = j + 1; i < m; ++i) {
      if (i > j + 1) chain *= -std::conj(zeros[i - 1]);
      mat(i, j) = defect[i] * defect[j] * chain;
    }
  }
  return {std::vector<cplx>(zeros.begin(), zeros.end()), std::move(mat)};
}

double inverse_norm_bound(std::span<const cplx> zeros) {
  double bound = 1.0;
  for (const auto& l : zeros) {
    const double r = std::abs(l);
    if (r == 0.0) return INFINITY;
    bound /= r;
  }
  return bound;
}

double mobius_resolvent_bound(std::span<const cplx> zeros, cplx z) {
  if (!(std::abs(z) <= 1.0 + 1e-14)) throw OutOfDomain("z outside the closed unit disk");
  double bound = 1.0;
  for (const auto& l : zeros) {
    const double gap = std::abs(z - l);
    if (gap < 1e-14) throw PoleEvaluation("z coincides with a zero");
    bound *= std::abs(1.0 - std::conj(l) * z) / gap;
  }
  return bound;
}

cplx RationalFunction::operator()(cplx z) const {
  auto horner = [z](const std::vector<cplx>& c) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  const cplx den = horner(denominator);
  if (den == cplx(0.0)) throw PoleEvaluation("evaluation at a pole");
  return horner(numerator) / den;
}

std::vector<cplx> RationalFunction::poles() const {
  std::size_t deg = denominator.size();
  while (deg > 0 && denominator[deg - 1] == cplx(0.0)) --deg;
  if (deg == 0) throw InvalidInputs("zero denominator");
  if (deg == 1) return {};
  const std::size_t d = deg - 1;
  const cplx lead = denominator[d];
  ComplexMatrix companion(d);
  for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -denominator[i] / lead;
  return eigenvalues(companion);
}

ComplexMatrix polynomial_of(const ComplexMatrix& x, std::span<const cplx> coeffs) {
  const std::size_t n = x.dim();
  ComplexMatrix acc(n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

ComplexMatrix rational_of(const ComplexMatrix& x, const RationalFunction& psi) {
  const ComplexMatrix den = polynomial_of(x, psi.denominator);
  const ComplexMatrix num = polynomial_of(x, psi.numerator);
  const LuDecomposition lu(den);
  if (lu.singular()) throw PoleEvaluation("denominator is singular at the matrix");
  const ComplexMatrix inv = lu.inverse();
  const double cond = op_norm(den) * op_norm(inv);
  if (!(cond <= 1e12)) throw PoleEvaluation("denominator condition number exceeds 1e12");
  return inv * num;
}

DominanceCheck rational_dominance_check(const ComplexMatrix& a, std::span<const cplx> zeros,
                                        const RationalFunction& psi) {
  if (op_norm(a) > 1.0 + 1e-12) throw NotAContraction("||A|| exceeds 1");
  for (const auto& p : psi.poles()) {
    for (const auto& l : zeros) {
      if (std::abs(p - l) < 1e-6) throw PoleEvaluation("pole of psi within 1e-6 of a zero");
    }
  }
  const ModelMatrix model = build_model_matrix(zeros);
  DominanceCheck out;
  out.lhs_norm = op_norm(rational_of(a, psi));
  out.rhs_norm = op_norm(rational_of(model.matrix, psi));
  out.holds = out.lhs_norm <= out.rhs_norm + 1e-8;
  return out;
}

}  // namespace specvar
