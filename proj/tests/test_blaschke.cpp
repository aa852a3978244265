#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "specvar/blaschke.hpp"
#include "specvar/elliptic.hpp"
#include "specvar/error.hpp"
#include "specvar/random.hpp"

using namespace specvar;

TEST_SUITE("blaschke") {
  TEST_CASE("evaluation") {
    CHECK(std::abs(BlaschkeProduct({0.0})(0.3) - 0.3) <= 1e-16);
    CHECK(std::abs(BlaschkeProduct({0.5})(0.5)) == 0.0);
    const BlaschkeProduct b({0.5, -0.5});
    for (int k = 0; k < 32; ++k) {
      const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / 32.0);
      CHECK(std::abs(std::abs(eval(b, z)) - 1.0) <= 1e-12);
    }
    CHECK_THROWS_AS(BlaschkeProduct({1.5}), InvalidSpectrum);
    CHECK_THROWS_AS(BlaschkeProduct({0.5})(2.0), PoleEvaluation);
    CHECK(BlaschkeProduct{}(0.7) == cplx(1.0));
  }

  TEST_CASE("bounded by one inside the disk") {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<cplx> zeros(rng.uniform_int(1, 6));
      for (auto& z : zeros) z = rng.in_disk(1.0);
      const BlaschkeProduct b(zeros);
      CHECK(std::abs(b(rng.in_disk(0.999))) <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("segment maximum") {
    CHECK(max_abs_on_segment(BlaschkeProduct({0.0}), -0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(max_abs_on_segment(BlaschkeProduct{}, -0.5, 0.5) == 1.0);
    CHECK_THROWS_AS(max_abs_on_segment(BlaschkeProduct({0.0}), 0.5, -0.5), OutOfDomain);
  }

  TEST_CASE("segment maximum matches a dense grid") {
    Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<cplx> zeros(3);
      for (auto& z : zeros) z = rng.in_disk(0.95);
      const BlaschkeProduct b(zeros);
      const double lo = rng.uniform(-0.9, 0.0);
      const double hi = rng.uniform(0.0, 0.9);
      const double ref = oracle::grid_max([&](double t) { return std::abs(b(t)); }, lo, hi, 1000000);
      const double got = max_abs_on_segment(b, lo, hi);
      CHECK(got >= ref - 1e-12);
      CHECK(got <= ref + 1e-8);
    }
  }

  TEST_CASE("Chebyshev-Blaschke value") {
    for (double q : {0.3, 0.6, 0.9}) {
      const double h = std::sqrt(modulus_k(q));
      // The single zero at the origin attains the n = 1 value.
      CHECK(cheb_blaschke_value(q, 1) == doctest::Approx(h).epsilon(1e-14));
      CHECK(max_abs_on_segment(BlaschkeProduct({0.0}), -h, h) == doctest::Approx(h).epsilon(1e-14));
    }
    CHECK(cheb_blaschke_value(0.0, 3) == 0.0);
  }

  TEST_CASE("polynomial lower bound values") {
    CHECK(cheb_poly_lower_bound(0.3, 0.3, 2) == 0.0);
    CHECK(cheb_poly_lower_bound(-1.0, 1.0, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cheb_poly_lower_bound(0.0, 1.0, 3) == doctest::Approx(1.0 / 32.0).epsilon(1e-15));
    // The monic Chebyshev polynomial on [-1, 1] attains the bound.
    for (int n = 1; n <= 4; ++n) {
      auto t = [n](double x) { return std::abs(std::cos(n * std::acos(x)) / std::pow(2.0, n - 1)); };
      const double mx = oracle::grid_max(t, -1.0, 1.0, 100001);
      CHECK(mx == doctest::Approx(cheb_poly_lower_bound(-1.0, 1.0, n)).epsilon(1e-12));
    }
  }

  TEST_CASE("minimax search never beats the exact value") {
    for (int n = 1; n <= 3; ++n) {
      for (double q : {0.3, 0.6, 0.9}) {
        const double h = std::sqrt(modulus_k(q));
        const double target = cheb_blaschke_value(q, n);
        const auto res = search_minimax_candidates(n, h, 100, 3, 1000 * n + static_cast<int>(q * 10));
        for (double m : res.all_maxima) CHECK(m >= target - 1e-9);
        if (n <= 2) CHECK(res.best_refined.max_abs <= 1.02 * target);
      }
    }
  }
}
