#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cavityqed/errors.hpp"
#include "cavityqed/special_functions.hpp"
#include "oracles/oracle_values.hpp"
#include "test_helpers.hpp"

using namespace cavityqed;

TEST_CASE("Bessel functions match the extended-precision table") {
  for (const auto& row : oracle::kBessel) {
    CAPTURE(row.x);
    // Absolute accuracy near zeros of the oscillating functions.
    CHECK(std::abs(cavityqed::j0(row.x) - row.j0) < 1e-13 * std::max(1e-3, std::abs(row.j0)));
    CHECK(std::abs(cavityqed::j1(row.x) - row.j1) < 1e-13 * std::max(1e-3, std::abs(row.j1)));
    CHECK(std::abs(cavityqed::y0(row.x) - row.y0) < 1e-13 * std::max(1e-3, std::abs(row.y0)));
    CHECK(std::abs(cavityqed::y1(row.x) - row.y1) < 1e-13 * std::max(1e-3, std::abs(row.y1)));
    CHECK(rel_err(k0(row.x), row.k0) < 1e-13);
    CHECK(rel_err(k1(row.x), row.k1) < 1e-13);
  }
}

TEST_CASE("Bessel values at the origin and the first zero of J0") {
  CHECK(cavityqed::j0(0.0) == 1.0);
  CHECK(cavityqed::j1(0.0) == 0.0);
  CHECK(cavityqed::j2(0.0) == 0.0);
  CHECK(std::abs(cavityqed::j0(2.404825557695773)) < 1e-10);
  CHECK(bessel_j(BesselOrder::one, 0.0) == 0.0);
}

TEST_CASE("Small-argument forms of Y0 and Y1") {
  const double gamma = 0.57721566490153286;
  for (double x : {1e-6, 1e-8}) {
    CHECK(rel_err(cavityqed::y0(x), 2.0 / M_PI * (std::log(x / 2.0) + gamma)) < 1e-9);
    CHECK(rel_err(cavityqed::y1(x), -2.0 / (M_PI * x)) < 1e-9);
  }
  CHECK(cavityqed::y0(1e-300) < -400.0);
}

TEST_CASE("K0 follows its asymptotic series at x = 20") {
  const double x = 20.0;
  // sqrt(pi/2x) e^{-x} sum_k prod_{j<=k} (-(2j-1)^2) / (j 8x), truncated near its smallest term.
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 10; ++k) {
    term *= -(2.0 * k - 1.0) * (2.0 * k - 1.0) / (k * 8.0 * x);
    sum += term;
  }
  const double asym = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) * sum;
  CHECK(rel_err(k0(x), asym) < 1e-8);
  CHECK(rel_err(k0_scaled(x), k0(x) * std::exp(x)) < 1e-14);
  CHECK(rel_err(k1_scaled(x), k1(x) * std::exp(x)) < 1e-14);
}

TEST_CASE("j1_over_x is smooth at the origin") {
  CHECK(j1_over_x(0.0) == doctest::Approx(0.5));
  CHECK(rel_err(j1_over_x(1e-5), cavityqed::j1(1e-5) / 1e-5) < 1e-12);
  CHECK(rel_err(j1_over_x(3.0), cavityqed::j1(3.0) / 3.0) < 1e-15);
}

TEST_CASE("Bessel domain errors") {
  CHECK_THROWS_AS(bessel_j(BesselOrder::zero, -1.0), DomainError);
  CHECK(cavityqed::j1(-1.0) == -cavityqed::j1(1.0));
  CHECK_THROWS_AS(cavityqed::y0(0.0), DomainError);
  CHECK_THROWS_AS(cavityqed::y1(-2.0), DomainError);
  CHECK_THROWS_AS(k0(0.0), DomainError);
  CHECK_THROWS_AS(bessel_y(BesselOrder::two, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_k(BesselOrder::two, 1.0), DomainError);
}
