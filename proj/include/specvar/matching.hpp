#pragma once

#include <cstddef>
#include <vector>

#include "specvar/linalg.hpp"

namespace specvar {

/// Square matrix of non-negative finite costs, row-major.
class CostMatrix {
 public:
  /// Throws InvalidInputs for negative or non-finite entries or a wrong size.
  CostMatrix(std::size_t n, std::vector<double> costs);

  std::size_t dim() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return c_[i * n_ + j]; }
  const std::vector<double>& values() const noexcept { return c_; }

  static CostMatrix euclidean(const Spectrum& a, const Spectrum& b);
  static CostMatrix hyperbolic(const Spectrum& a, const Spectrum& b);

 private:
  std::size_t n_;
  std::vector<double> c_;
};

struct Assignment {
  std::vector<std::size_t> permutation;  ///< row i is matched to column permutation[i]
  double value = 0.0;                    ///< max_i c(i, permutation[i])
};

/// Exact bottleneck (min-max) assignment: binary search over the sorted
/// distinct costs, with Hopcroft-Karp perfect-matching feasibility at each
/// threshold. The smallest feasible threshold wins.
Assignment bottleneck_assignment(const CostMatrix& c);

/// Euclidean optimal matching distance. Throws SizeMismatch.
double d_euclid(const Spectrum& a, const Spectrum& b);

/// Pseudo-hyperbolic optimal matching distance. Throws SizeMismatch or
/// DegenerateInput.
double d_hyper(const Spectrum& a, const Spectrum& b);

}  // namespace specvar
