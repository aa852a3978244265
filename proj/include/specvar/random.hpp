#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "specvar/linalg.hpp"

namespace specvar {

/// splitmix64 finalizer; the building block of the counter-based seeding.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for trial `index` of stream `stream` under `master`. Pure function of
/// its arguments, so trials can run in any order or concurrently.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  int uniform_int(int lo, int hi);  // inclusive
  double normal();
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  cplx complex_normal();
  /// Uniform in the disk of the given radius (area measure).
  cplx in_disk(double radius = 1.0);
  /// log-uniform on [lo, hi], lo > 0.
  double log_uniform(double lo, double hi);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Ginibre matrix: i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(std::size_t n, Rng& rng);

/// Haar-distributed unitary from the QR factorization of a Ginibre draw.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

}  // namespace specvar
