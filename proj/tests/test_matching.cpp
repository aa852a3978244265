#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "specvar/error.hpp"
#include "specvar/hypgeo.hpp"
#include "specvar/matching.hpp"
#include "specvar/random.hpp"

using namespace specvar;

TEST_SUITE("matching") {
  TEST_CASE("trivial assignments") {
    std::vector<double> c(9, 1.0);
    for (int i = 0; i < 3; ++i) c[i * 3 + i] = 0.0;
    const auto a = bottleneck_assignment(CostMatrix(3, c));
    CHECK(a.value == 0.0);
    CHECK(a.permutation == std::vector<std::size_t>{0, 1, 2});
    CHECK(bottleneck_assignment(CostMatrix(1, {0.7})).value == 0.7);
    CHECK_THROWS_AS(CostMatrix(2, {1.0, -1.0, 0.0, 0.0}), InvalidInputs);
  }

  TEST_CASE("permutation realizes the value") {
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = rng.uniform_int(1, 20);
      std::vector<double> c(n * n);
      for (auto& x : c) x = rng.uniform();
      const CostMatrix cm(n, c);
      const auto a = bottleneck_assignment(cm);
      std::vector<bool> used(n, false);
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        CHECK_FALSE(used[a.permutation[i]]);
        used[a.permutation[i]] = true;
        worst = std::max(worst, cm(i, a.permutation[i]));
      }
      CHECK(worst == a.value);
    }
  }

  TEST_CASE("exact against exhaustive enumeration") {
    Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = rng.uniform_int(1, 7);
      std::vector<double> c(n * n);
      const bool ties = trial % 3 == 0;
      for (auto& x : c) x = ties ? rng.uniform_int(0, 3) : rng.uniform();
      const CostMatrix cm(n, c);
      const double ref = oracle::brute_bottleneck(n, [&](std::size_t i, std::size_t j) { return cm(i, j); });
      CHECK(bottleneck_assignment(cm).value == ref);
    }
  }

  TEST_CASE("matching distances") {
    const Spectrum s{0.1, cplx(0.2, 0.3), -0.4};
    CHECK(d_euclid(s, s) == 0.0);
    CHECK(d_euclid({0.0, 1.0}, {1.0, 0.0}) == 0.0);
    CHECK(d_euclid({cplx(0.1, 0.2)}, {cplx(-0.3, 0.5)}) == doctest::Approx(0.5));
    CHECK(d_hyper(s, s) == 0.0);
    CHECK(d_hyper({0.0}, {cplx(0.3, 0.4)}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(d_euclid({0.0}, {0.0, 1.0}), SizeMismatch);
    CHECK_THROWS_AS(d_hyper({1.0}, {1.0}), DegenerateInput);
  }

  TEST_CASE("hyperbolic distance against enumeration") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      Spectrum a(6), b(6);
      for (auto& z : a) z = rng.in_disk(0.99);
      for (auto& z : b) z = rng.in_disk(0.99);
      const double ref = oracle::brute_bottleneck(6, [&](std::size_t i, std::size_t j) { return oracle::pdist(a[i], b[j]); });
      CHECK(d_hyper(a, b) == doctest::Approx(ref).epsilon(1e-15));
      CHECK(std::abs(d_hyper(a, b) - d_hyper(b, a)) <= 1e-14);
      CHECK(d_euclid(a, b) <= 2.0);
      CHECK(d_hyper(a, b) <= 1.0);
    }
  }
}
