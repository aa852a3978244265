#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "specvar/error.hpp"
#include "specvar/hypgeo.hpp"
#include "specvar/random.hpp"

using namespace specvar;

namespace {

// Hyperbolically closest point of the model segment by golden section, mapped back.
cplx golden_projection(const Geodesic& g, cplx z) {
  const cplx w = g.to_model(z);
  const double t = oracle::golden_min([&](double x) { return oracle::pdist(x, w); }, -1.0 + 1e-15, 1.0 - 1e-15);
  return g.from_model(t);
}

}  // namespace

TEST_SUITE("hypgeo") {
  TEST_CASE("pseudo_distance examples") {
    CHECK(pseudo_distance(0.0, cplx(0.3, 0.4)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pseudo_distance(0.5, 0.5) == 0.0);
    CHECK(pseudo_distance(0.5, -0.5) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(pseudo_distance(cplx(0.2, 0.1), cplx(-0.4, 0.3)) ==
          doctest::Approx(pseudo_distance(cplx(-0.4, 0.3), cplx(0.2, 0.1))).epsilon(1e-15));
    CHECK_THROWS_AS(pseudo_distance(1.0, 1.0), DegenerateInput);
    CHECK_THROWS_AS(pseudo_distance(1.5, 0.0), OutOfDomain);
    CHECK(pseudo_distance(1.0, -1.0) == doctest::Approx(1.0));
  }

  TEST_CASE("hyperbolic disks convert to Euclidean ones") {
    auto d = to_euclidean({0.0, 0.3});
    CHECK(std::abs(d.center) == 0.0);
    CHECK(d.radius == doctest::Approx(0.3).epsilon(1e-15));
    d = to_euclidean({0.5, 0.5});
    CHECK(std::abs(d.center - 0.4) <= 1e-15);
    CHECK(d.radius == doctest::Approx(0.4).epsilon(1e-15));
    d = to_euclidean({cplx(0.6, 0.8), 0.7});
    CHECK(std::abs(d.center - cplx(0.6, 0.8)) <= 1e-15);
    CHECK(d.radius == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(to_euclidean({1.0, 1.0}), DegenerateInput);
  }

  TEST_CASE("disk boundary is the pseudo-distance level set") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const cplx a = rng.in_disk(0.98);
      const double r = rng.uniform(0.0, 0.98);
      const auto d = to_euclidean({a, r});
      for (int k = 0; k < 16; ++k) {
        const cplx z = d.center + std::polar(d.radius, 2.0 * std::numbers::pi * k / 16.0);
        CHECK(std::abs(oracle::pdist(a, z) - r) <= 1e-10);
      }
    }
  }

  TEST_CASE("geodesic parametrization") {
    const Geodesic g(cplx(0.1, 0.2), cplx(-0.3, 0.5));
    CHECK(std::abs(g.point(0.0) - g.a()) <= 1e-14);
    CHECK(std::abs(g.point(1.0) - g.b()) <= 1e-14);
    const Geodesic ray(0.0, 0.6);
    CHECK(std::abs(geodesic_point(ray, 0.5) - 0.3) <= 1e-15);
    CHECK_THROWS_AS(g.point(1.01 * g.parameter_bound()), OutOfDomain);
    CHECK_THROWS_AS(Geodesic(0.3, 0.3), DegenerateInput);
    for (double s = -0.999; s < 1.0; s += 0.01) {
      CHECK(std::abs(g.point(s * g.parameter_bound())) < 1.0);
    }
    // The model map straightens the geodesic onto the real diameter.
    for (double s : {-0.5, 0.25, 0.9}) {
      CHECK(std::abs(g.to_model(g.point(s)).imag()) <= 1e-14);
      CHECK(std::abs(g.from_model(g.to_model(cplx(0.2, -0.3))) - cplx(0.2, -0.3)) <= 1e-14);
    }
  }

  TEST_CASE("projection examples") {
    const Geodesic real_axis(-0.5, 0.5);
    CHECK(std::abs(project(real_axis, cplx(0.0, 0.3))) <= 1e-15);
    const Geodesic g(cplx(0.1, 0.2), cplx(-0.3, 0.5));
    const cplx on = g.point(0.4);
    CHECK(std::abs(project(g, on) - on) <= 1e-12);
    CHECK_THROWS(project(g, 1.0));
  }

  TEST_CASE("closed-form projection matches golden-section search") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const cplx a = rng.in_disk(0.9);
      const cplx b = rng.in_disk(0.9);
      if (std::abs(a - b) < 1e-3) continue;
      const Geodesic g(a, b);
      const cplx z = rng.in_disk(0.95);
      const cplx p = project(g, z);
      // The golden search only resolves the flat minimum to ~1e-8.
      CHECK(std::abs(p - golden_projection(g, z)) <= 1e-6);
      CHECK(std::abs(g.to_model(p).imag()) <= 1e-12);
    }
  }

  TEST_CASE("projection is a contraction") {
    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
      const cplx a = rng.in_disk(0.95);
      const cplx b = rng.in_disk(0.95);
      if (a == b) continue;
      const Geodesic g(a, b);
      const cplx z = rng.in_disk(0.95);
      const cplx w = rng.in_disk(0.95);
      CHECK(pseudo_distance(project(g, z), project(g, w)) <= pseudo_distance(z, w) + 1e-10);
    }
  }
}
