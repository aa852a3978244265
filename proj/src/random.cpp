#include "specvar/random.hpp"

#include <cmath>

namespace specvar {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                          std::uint64_t index) noexcept {
  // FNV-1a over the stream name keeps suites on disjoint streams.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : stream) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(master ^ h) + index);
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Rng::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

cplx Rng::complex_normal() {
  const double s = std::sqrt(0.5);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

cplx Rng::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double theta = uniform(0.0, 2.0 * M_PI);
  return std::polar(r, theta);
}

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

ComplexMatrix ginibre(std::size_t n, Rng& rng) {
  std::vector<cplx> e(n * n);
  for (auto& x : e) x = rng.complex_normal();
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  // Modified Gram-Schmidt on the columns; phases of R's diagonal are absorbed
  // into Q so the result is Haar distributed.
  ComplexMatrix g = ginibre(n, rng);
  ComplexMatrix q(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = g(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q(i, k);
      }
    }
    const double nv = vector_norm(v);
    for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / nv;
  }
  return q;
}

}  // namespace specvar
