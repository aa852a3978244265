#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "specvar/error.hpp"
#include "specvar/linalg.hpp"
#include "specvar/matching.hpp"
#include "specvar/random.hpp"

using namespace specvar;

TEST_SUITE("linalg") {
  TEST_CASE("construction validates shape and finiteness") {
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<cplx>(3)), InvalidMatrix);
    CHECK_THROWS_AS(ComplexMatrix(1, {cplx(NAN, 0.0)}), InvalidMatrix);
    CHECK_THROWS_AS(ComplexMatrix(1, {cplx(0.0, INFINITY)}), InvalidMatrix);
    CHECK(ComplexMatrix::identity(3)(1, 1) == cplx(1.0));
  }

  TEST_CASE("op_norm on simple matrices") {
    CHECK(op_norm(ComplexMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-14));
    const std::vector<cplx> d{0.3, 0.9};
    CHECK(op_norm(ComplexMatrix::diagonal(d)) == doctest::Approx(0.9).epsilon(1e-14));
    ComplexMatrix z(3);
    CHECK(op_norm(z) == 0.0);
  }

  TEST_CASE("op_norm agrees with power iteration on Ginibre draws") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Rng rng(seed);
      const ComplexMatrix g = ginibre(6, rng);
      const double ref = oracle::power_iteration_norm(g);
      CHECK(std::abs(op_norm(g) - ref) <= 1e-10 * ref);
    }
  }

  TEST_CASE("spectral radius") {
    ComplexMatrix j(3);
    j(0, 1) = 1.0;
    j(1, 2) = 1.0;
    CHECK(spectral_radius(j) == doctest::Approx(0.0).epsilon(1e-12));
    const std::vector<cplx> d{0.5, cplx(0.0, -0.7)};
    CHECK(spectral_radius(ComplexMatrix::diagonal(d)) == doctest::Approx(0.7).epsilon(1e-14));
  }

  TEST_CASE("eigenvalues of structured matrices") {
    ComplexMatrix u(3);
    u(0, 0) = 0.1;
    u(0, 2) = 5.0;
    u(1, 1) = cplx(0.0, 0.4);
    u(1, 2) = -2.0;
    u(2, 2) = -0.3;
    CHECK(d_euclid(eigenvalues(u), {0.1, cplx(0.0, 0.4), -0.3}) <= 1e-12);

    ComplexMatrix jordan(2);
    jordan(0, 1) = 1.0;
    CHECK(d_euclid(eigenvalues(jordan), {0.0, 0.0}) <= 1e-12);

    ComplexMatrix companion(2);  // z^2 - 1
    companion(0, 1) = 1.0;
    companion(1, 0) = 1.0;
    CHECK(d_euclid(eigenvalues(companion), {1.0, -1.0}) <= 1e-13);
  }

  TEST_CASE("eigenvalues match characteristic-polynomial roots at n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(100 * n + seed);
        const ComplexMatrix a = ginibre(n, rng);
        const auto roots = oracle::poly_roots(oracle::char_poly(a));
        CHECK(d_euclid(eigenvalues(a), roots) <= 1e-9);
        double rho = 0.0;
        for (const auto& r : roots) rho = std::max(rho, std::abs(r));
        CHECK(spectral_radius(a) == doctest::Approx(rho).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("eigenpairs have small residuals") {
    Rng rng(42);
    const std::size_t n = 8;
    const ComplexMatrix a = ginibre(n, rng);
    const double scale = op_norm(a);
    for (const cplx lam : eigenvalues(a)) {
      // One step of inverse iteration with a slightly shifted matrix.
      ComplexMatrix shifted = a;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lam + cplx(1e-10, 0.0);
      std::vector<cplx> v(n, cplx(1.0));
      const LuDecomposition lu(shifted);
      for (int it = 0; it < 3; ++it) {
        v = lu.solve(v);
        const double nv = vector_norm(v);
        for (auto& x : v) x /= nv;
      }
      auto av = specvar::apply(a, v);
      for (std::size_t i = 0; i < n; ++i) av[i] -= lam * v[i];
      CHECK(vector_norm(av) <= 1e-8 * scale);
    }
  }

  TEST_CASE("eigenvalues handle n up to 64") {
    Rng rng(64);
    const ComplexMatrix a = ginibre(64, rng);
    const Spectrum s = eigenvalues(a);
    CHECK(s.size() == 64);
    cplx tr = 0.0;
    cplx sum = 0.0;
    for (std::size_t i = 0; i < 64; ++i) tr += a(i, i);
    for (const auto& z : s) sum += z;
    CHECK(std::abs(tr - sum) <= 1e-9 * std::abs(tr) + 1e-9);
  }

  TEST_CASE("min_poly_degree") {
    CHECK(min_poly_degree(ComplexMatrix::identity(5)) == 1);
    for (std::size_t n = 1; n <= 6; ++n) {
      ComplexMatrix j(n);
      for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
      for (std::size_t i = 0; i < n; ++i) j(i, i) = 0.3;
      CHECK(min_poly_degree(j) == static_cast<int>(n));
    }
    const std::vector<cplx> d{0.2, 0.2, 0.5};
    CHECK(min_poly_degree(ComplexMatrix::diagonal(d)) == 2);
    ComplexMatrix zero(4);
    CHECK(min_poly_degree(zero) == 1);
    Rng rng(3);
    CHECK(min_poly_degree(ginibre(7, rng)) == 7);
  }

  TEST_CASE("LU solves, inverts and computes determinants") {
    Rng rng(11);
    const ComplexMatrix a = ginibre(5, rng);
    const ComplexMatrix prod = a * inverse(a);
    CHECK(frobenius_norm(prod - ComplexMatrix::identity(5)) <= 1e-12);
    const auto c = oracle::char_poly(a);
    // det(A) = (-1)^n c_0
    CHECK(std::abs(determinant(a) + c[0]) <= 1e-10 * std::abs(c[0]));
    ComplexMatrix singular(2);
    singular(0, 0) = 1.0;
    singular(1, 0) = 2.0;
    CHECK(LuDecomposition(singular).singular());
    CHECK(determinant(singular) == cplx(0.0));
  }

  TEST_CASE("size mismatches are rejected") {
    CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(3), InvalidMatrix);
    CHECK_THROWS_AS(ComplexMatrix(2) * ComplexMatrix(3), InvalidMatrix);
  }
}
