#include <cmath>

#include "doctest.h"
#include "specvar/bounds.hpp"
#include "specvar/elliptic.hpp"
#include "specvar/error.hpp"
#include "specvar/harness.hpp"
#include "specvar/hypgeo.hpp"
#include "specvar/random.hpp"

using namespace specvar;

namespace {

BoundInputs inputs(double na, double nb, double rho, double diff, int m, int n) {
  BoundInputs in;
  in.normA = na;
  in.normB = nb;
  in.rhoB = rho;
  in.diffNorm = diff;
  in.m = m;
  in.n = n;
  return in;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("input validation") {
    CHECK_NOTHROW(inputs(0.5, 0.5, 0.4, 0.1, 2, 2).validate());
    CHECK_THROWS_AS(inputs(-0.1, 0.5, 0.4, 0.1, 2, 2).validate(), InvalidInputs);
    CHECK_THROWS_AS(inputs(0.5, 0.5, 0.6, 0.1, 2, 2).validate(), InvalidInputs);
    CHECK_THROWS_AS(inputs(0.5, 0.5, 0.4, 0.1, 3, 2).validate(), InvalidInputs);
    CHECK_THROWS_AS(inputs(0.5, 0.5, 0.4, 0.1, 0, 2).validate(), InvalidInputs);
  }

  TEST_CASE("degree one reduces to Bauer-Fike style estimates") {
    const auto in = inputs(0.5, 0.5, 0.0, 0.1, 1, 1);
    CHECK(euclid_bound(in) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(hyper_bound_simple(in) == doctest::Approx(0.2).epsilon(1e-15));
    // m = 1: k(sqrt(k^{-1}(x))) with x = diff^2.
    const double oracle = modulus_k(std::sqrt(inverse_k(0.01)));
    CHECK(hyper_bound_exact(in) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(hyper_bound_exact(in) <= hyper_bound_simple(in));
  }

  TEST_CASE("zero perturbation gives zero bounds") {
    const auto in = inputs(0.6, 0.6, 0.5, 0.0, 3, 3);
    CHECK(euclid_bound(in) == 0.0);
    CHECK(hyper_bound_exact(in) == 0.0);
    CHECK(hyper_bound_simple(in) == 0.0);
    CHECK(krause_bound(in) == 0.0);
  }

  TEST_CASE("hyperbolic bound domain and vacuity") {
    CHECK_THROWS_AS(hyper_bound_exact(inputs(1.0, 0.5, 0.4, 0.1, 2, 2)), InvalidInputs);
    CHECK_THROWS_AS(hyper_bound_simple(inputs(1.2, 0.5, 0.4, 0.1, 2, 2)), InvalidInputs);
    const auto big = inputs(0.9, 0.9, 0.9, 0.5, 2, 2);
    CHECK(hyper_bound_vacuous(big));
    CHECK(hyper_bound_exact(big) == 1.0);
    CHECK_FALSE(hyper_bound_vacuous(inputs(0.5, 0.5, 0.4, 1e-3, 2, 2)));
  }

  TEST_CASE("exact hyperbolic bound never exceeds the simple one") {
    Rng rng(41);
    for (int trial = 0; trial < 2000; ++trial) {
      const int n = rng.uniform_int(1, 12);
      const int m = rng.uniform_int(1, n);
      const double na = rng.uniform(0.0, 0.99);
      const double nb = rng.uniform(0.0, 0.99);
      const double rho = rng.uniform(0.0, nb);
      const double diff = rng.log_uniform(1e-14, 1e-1);
      const auto in = inputs(na, nb, rho, diff, m, n);
      const double exact = hyper_bound_exact(in);
      CHECK(exact >= 0.0);
      CHECK(exact <= 1.0);
      CHECK(exact <= hyper_bound_simple(in) * (1.0 + 1e-12) + 1e-15);
    }
  }

  TEST_CASE("reciprocal alpha matches reference values") {
    const std::vector<std::pair<int, double>> table = {
        {1, 2.0},     {2, 3.2237},  {3, 3.1748},  {4, 3.0458},   {5, 2.9302},  {6, 2.8353},  {7, 2.7579},
        {8, 2.6942}, {9, 2.6410},  {10, 2.5959}, {11, 2.5572}, {12, 2.5236}, {100, 2.101}, {1000, 2.0145}};
    for (const auto& [n, reference] : table) {
      CHECK(std::abs(1.0 / krause_alpha(n) - reference) <= 5e-4);
    }
    CHECK(1.0 / krause_alpha(12) < 2.6543);
    CHECK_THROWS_AS(krause_alpha(0), InvalidInputs);
  }

  TEST_CASE("Krause admissibility") {
    const auto in = inputs(0.5, 0.5, 0.5, 1e-8, 3, 3);
    CHECK(krause_condition(in, 0.2));
    CHECK_FALSE(krause_condition(inputs(0.5, 0.5, 0.5, 0.3, 3, 3), 0.2));
    CHECK_THROWS_AS(krause_condition(inputs(0.5, 0.5, 0.5, 1e-8, 1, 1), 0.2), InvalidInputs);
    CHECK_THROWS_AS(krause_condition(in, 0.0), InvalidInputs);
    // n = 2 closed form: (1/(2 M2)) 3^2 alpha_2^2 lambda^2.
    const auto two = inputs(0.5, 0.4, 0.3, 1e-8, 2, 2);
    const double a2 = krause_alpha(2);
    CHECK(krause_threshold(two, 0.3) == doctest::Approx(9.0 * a2 * a2 * 0.09 / 1.0).epsilon(1e-14));
  }

  TEST_CASE("constant registry") {
    CHECK(ConstantChoice::parse("bek").value(4) == doctest::Approx(std::pow(2.0, 2.0 - 0.25)));
    CHECK(ConstantChoice::parse("krause").value(7) == doctest::Approx(16.0 / (3.0 * std::sqrt(3.0))));
    CHECK(ConstantChoice::parse("2.6543").value(12) == 2.6543);
    CHECK_THROWS_AS(ConstantChoice::parse("-1"), ConfigError);
    CHECK_THROWS_AS(ConstantChoice::parse("nope"), ConfigError);
  }

  TEST_CASE("containment agrees with the Euclidean picture") {
    Rng rng(55);
    int agree = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const cplx a = rng.in_disk(0.99);
      const double rh = rng.uniform(0.0, 0.99);
      const double re = rng.uniform(0.0, 2.0);
      const auto d = to_euclidean({a, rh});
      const double gap = re - (std::abs(a - d.center) + d.radius);
      if (std::abs(gap) < 1e-9) continue;
      CHECK(containment_condition(a, rh, re) == (gap > 0.0));
      ++agree;
    }
    CHECK(agree > 1900);
    CHECK(containment_condition(0.5, 0.0, 0.0));
  }

  TEST_CASE("localization disks") {
    const auto in = inputs(0.5, 0.5, 0.4, 1e-3, 2, 2);
    const Spectrum s{0.0, 0.6};
    const auto hyper = localization_disks(s, in, DiskMode::Hyper);
    REQUIRE(hyper.size() == 2);
    const double rh = hyperbolic_radius(in, false);
    CHECK(std::abs(hyper[0].center) <= 1e-15);
    CHECK(hyper[0].radius == doctest::Approx(rh).epsilon(1e-14));
    CHECK(hyper[1].radius < hyper[0].radius);
    const auto euclid = localization_disks(s, in, DiskMode::Euclid);
    CHECK(euclid[0].radius == euclid[1].radius);
    CHECK(euclid[0].center == s[0]);
    CHECK(hyperbolic_radius(in, true) >= rh);
  }

  TEST_CASE("bound report") {
    Rng rng(66);
    const ComplexMatrix a = random_contraction(4, 0.7, rng);
    const auto same = make_bound_report(a, a);
    CHECK(same.euclid == 0.0);
    REQUIRE(same.dE.has_value());
    CHECK(*same.dE <= 1e-10);
    CHECK(same.all_pass());

    const ComplexMatrix b = a + random_perturbation(4, 1e-4, rng);
    const auto rep = make_bound_report(a, b);
    CHECK(rep.all_pass());
    REQUIRE(rep.hyperExact.has_value());
    CHECK(*rep.dH <= *rep.hyperExact + 1e-9);
    CHECK(*rep.dE <= rep.euclid + 1e-9);
    ReportOptions opt;
    opt.m = 7;
    CHECK_THROWS_AS(make_bound_report(a, b, opt), InvalidInputs);
  }
}
