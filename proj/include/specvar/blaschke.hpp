#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "specvar/linalg.hpp"

namespace specvar {

/// Finite Blaschke product prod_i (z - l_i) / (1 - conj(l_i) z) with zeros in
/// the closed unit disk. The empty product is the constant 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  /// Throws InvalidSpectrum for any zero outside the closed disk.
  explicit BlaschkeProduct(std::vector<cplx> zeros);

  std::span<const cplx> zeros() const noexcept { return zeros_; }
  std::size_t degree() const noexcept { return zeros_.size(); }

  /// Throws PoleEvaluation when |1 - conj(l_i) z| < 1e-15.
  cplx operator()(cplx z) const;

 private:
  std::vector<cplx> zeros_;
};

cplx eval(const BlaschkeProduct& b, cplx z);

/// max_{t in [lo, hi]} |B(t)| on a real segment inside [-1, 1]: a 2049-point
/// grid followed by golden-section refinement around the 8 best grid peaks.
double max_abs_on_segment(const BlaschkeProduct& b, double lo, double hi);

/// Exact minimax value sqrt(k(q^n)) of degree-n products on
/// [-sqrt(k(q)), sqrt(k(q))].
double cheb_blaschke_value(double q, int n);

/// |b - a|^n / 2^{2n-1}: lower bound for max |p| of monic degree-n p along
/// any curve joining a and b.
double cheb_poly_lower_bound(cplx a, cplx b, int n);

struct MinimaxCandidate {
  std::vector<double> zeros;  ///< real zeros in (-1, 1)
  double max_abs = 0.0;       ///< max |B| on the segment
};

struct MinimaxSearch {
  MinimaxCandidate best_random;
  MinimaxCandidate best_refined;
  /// Every evaluated segment maximum, random draws first; used to certify
  /// that no candidate beats the exact minimax value.
  std::vector<double> all_maxima;
};

/// Randomized plus Nelder-Mead search for a degree-n product with small
/// maximum modulus on [-half_width, half_width]. Zeros stay real.
MinimaxSearch search_minimax_candidates(int n, double half_width, int random_draws,
                                        int restarts, std::uint64_t seed);

}  // namespace specvar
