#include <cmath>
#include <numbers>

#include "doctest.h"
#include "specvar/error.hpp"
#include "specvar/harness.hpp"
#include "specvar/matching.hpp"
#include "specvar/modelop.hpp"
#include "specvar/random.hpp"

using namespace specvar;

TEST_SUITE("modelop") {
  TEST_CASE("model matrix entries") {
    const auto one = build_model_matrix(std::vector<cplx>{cplx(0.2, 0.3)});
    CHECK(one.matrix.dim() == 1);
    CHECK(one.matrix(0, 0) == cplx(0.2, 0.3));

    const cplx l1(0.3, -0.2);
    const cplx l2(-0.5, 0.1);
    const auto two = build_model_matrix(std::vector<cplx>{l1, l2});
    CHECK(two.matrix(0, 0) == l1);
    CHECK(two.matrix(1, 1) == l2);
    CHECK(two.matrix(0, 1) == cplx(0.0));
    const double off = std::sqrt(1.0 - std::norm(l1)) * std::sqrt(1.0 - std::norm(l2));
    CHECK(std::abs(two.matrix(1, 0) - off) <= 1e-15);

    const auto shift = build_model_matrix(std::vector<cplx>(3, 0.0));
    CHECK(op_norm(shift.matrix) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(shift.matrix(2, 0)) <= 1e-15);  // the middle zero kills the entry

    // Third-row entry carries the product over the middle zero.
    const std::vector<cplx> z3{0.2, cplx(0.1, 0.4), -0.6};
    const auto m3 = build_model_matrix(z3);
    const cplx expect = std::sqrt(1.0 - std::norm(z3[0])) * std::sqrt(1.0 - std::norm(z3[2])) * (-std::conj(z3[1]));
    CHECK(std::abs(m3.matrix(2, 0) - expect) <= 1e-15);

    CHECK_THROWS_AS(build_model_matrix(std::vector<cplx>{1.5}), InvalidSpectrum);
    CHECK_THROWS_AS(build_model_matrix(std::vector<cplx>{}), InvalidSpectrum);
    // Boundary zeros are accepted and make the matrix reducible.
    const auto edge = build_model_matrix(std::vector<cplx>{1.0, 0.5});
    CHECK(std::abs(edge.matrix(1, 0)) == 0.0);
  }

  TEST_CASE("model matrix invariants on random zero sets") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<cplx> zeros(rng.uniform_int(1, 8));
      for (auto& z : zeros) z = rng.in_disk(0.999);
      const auto mm = build_model_matrix(zeros);
      CHECK(op_norm(mm.matrix) <= 1.0 + 1e-9);
      CHECK(d_euclid(eigenvalues(mm.matrix), zeros) <= 1e-8);
    }
  }

  TEST_CASE("inverse and resolvent bounds") {
    CHECK(inverse_norm_bound(std::vector<cplx>{0.5}) == doctest::Approx(2.0));
    CHECK(inverse_norm_bound(std::vector<cplx>{0.5, 0.5}) == doctest::Approx(4.0));
    CHECK(std::isinf(inverse_norm_bound(std::vector<cplx>{0.5, 0.0})));
    CHECK(mobius_resolvent_bound(std::vector<cplx>{0.0}, 0.5) == doctest::Approx(2.0));
    const std::vector<cplx> zs{cplx(0.2, 0.1), -0.7};
    CHECK(mobius_resolvent_bound(zs, std::polar(1.0, 0.3)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(mobius_resolvent_bound(zs, -0.7), PoleEvaluation);
  }

  TEST_CASE("bounds hold on prescribed-spectrum contractions") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<cplx> zeros(rng.uniform_int(1, 5));
      for (auto& z : zeros) z = std::polar(rng.uniform(0.1, 0.95), rng.uniform(0.0, 6.28));
      const ComplexMatrix a = prescribed_spectrum_contraction(zeros, rng);
      CHECK(op_norm(a) <= 1.0);
      CHECK(d_euclid(eigenvalues(a), zeros) <= 1e-6);
      const double bound = inverse_norm_bound(zeros);
      CHECK(op_norm(inverse(a)) <= bound * (1.0 + 1e-8));
      const cplx z = rng.in_disk(0.99);
      const std::size_t n = a.dim();
      const ComplexMatrix id = ComplexMatrix::identity(n);
      const double lhs = op_norm(inverse(z * id - a) * (id - std::conj(z) * a));
      CHECK(lhs <= mobius_resolvent_bound(zeros, z) * (1.0 + 1e-8));
    }
  }

  TEST_CASE("rational functions") {
    RationalFunction psi;
    psi.numerator = {1.0, 2.0};    // 1 + 2z
    psi.denominator = {-0.5, 1.0};  // z - 0.5
    CHECK(std::abs(psi(2.0) - cplx(5.0 / 1.5)) <= 1e-15);
    const auto poles = psi.poles();
    REQUIRE(poles.size() == 1);
    CHECK(std::abs(poles[0] - 0.5) <= 1e-14);

    const std::vector<cplx> d{0.1, -0.2};
    const ComplexMatrix x = ComplexMatrix::diagonal(d);
    const ComplexMatrix px = rational_of(x, psi);
    CHECK(std::abs(px(0, 0) - psi(0.1)) <= 1e-14);
    CHECK(std::abs(px(1, 1) - psi(-0.2)) <= 1e-14);
    const std::vector<cplx> c{1.0, 0.0, 1.0};  // 1 + z^2
    const ComplexMatrix p2 = polynomial_of(x, c);
    CHECK(std::abs(p2(1, 1) - 1.04) <= 1e-15);
  }

  TEST_CASE("dominance examples") {
    Rng rng(202);
    const std::vector<cplx> zeros{0.3, cplx(-0.2, 0.5), 0.6};
    const ComplexMatrix a = prescribed_spectrum_contraction(zeros, rng);
    RationalFunction ident;
    ident.numerator = {0.0, 1.0};
    auto r = rational_dominance_check(a, zeros, ident);
    CHECK(r.holds);
    CHECK(r.rhs_norm <= 1.0 + 1e-9);
    RationalFunction one;
    one.numerator = {1.0};
    r = rational_dominance_check(a, zeros, one);
    CHECK(r.lhs_norm == doctest::Approx(1.0));
    CHECK(r.rhs_norm == doctest::Approx(1.0));

    RationalFunction near;
    near.numerator = {1.0};
    near.denominator = {-0.3 - 1e-8, 1.0};
    CHECK_THROWS_AS(rational_dominance_check(a, zeros, near), PoleEvaluation);
    ComplexMatrix big = a;
    big *= 2.0;
    CHECK_THROWS_AS(rational_dominance_check(big, zeros, one), NotAContraction);
  }

  TEST_CASE("dominance on random instances") {
    Rng rng(303);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<cplx> zeros(rng.uniform_int(1, 5));
      for (auto& z : zeros) z = rng.in_disk(0.95);
      const ComplexMatrix a = prescribed_spectrum_contraction(zeros, rng);
      RationalFunction psi;
      psi.numerator.resize(rng.uniform_int(1, 4));
      for (auto& c : psi.numerator) c = rng.complex_normal();
      const cplx pole = 1.2 * std::polar(1.0, rng.uniform(0.0, 6.28));
      psi.denominator = {-pole, 1.0};
      const auto r = rational_dominance_check(a, zeros, psi);
      CHECK(r.holds);
      ++checked;
    }
    CHECK(checked == 200);
  }
}
