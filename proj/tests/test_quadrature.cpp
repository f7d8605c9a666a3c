#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/golden.hpp"
#include "aeris/quadrature.hpp"

using namespace aeris;

TEST_CASE("adaptive_simpson exact on polynomials") {
  CHECK(quadrature::adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0,
                                     1e-12) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(quadrature::adaptive_simpson([](double x) { return x * x * x; }, -2.0,
                                     2.0, 1e-12) == doctest::Approx(0.0));
}

TEST_CASE("adaptive_simpson on transcendental integrands") {
  CHECK(quadrature::adaptive_simpson([](double x) { return std::sin(x); }, 0.0,
                                     M_PI, 1e-10) ==
        doctest::Approx(2.0).epsilon(1e-10));
  // Sharp Gaussian bump away from the midpoint stresses the refinement.
  const double v = quadrature::adaptive_simpson(
      [](double x) { return std::exp(-400.0 * (x - 0.13) * (x - 0.13)); },
      0.0, 1.0, 1e-12);
  const double ref = 0.5 * std::sqrt(M_PI / 400.0) *
                     (std::erf(20.0 * 0.13) + std::erf(20.0 * 0.87));
  CHECK(v == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("adaptive_simpson throws when depth is exhausted") {
  CHECK_THROWS_AS(quadrature::adaptive_simpson(
                      [](double x) { return 1.0 / std::sqrt(std::abs(x)); },
                      -1.0, 1.0, 1e-14, 8),
                  NumericalError);
}

TEST_CASE("integrate_to_infinity on decaying integrands") {
  CHECK(quadrature::integrate_to_infinity(
            [](double x) { return std::exp(-x); }, 1.0, 1e-10, 1e-13) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(quadrature::integrate_to_infinity(
            [](double x) { return std::exp(-0.5 * x * x); }, 1.0, 1e-10,
            1e-13) == doctest::Approx(std::sqrt(0.5 * M_PI)).epsilon(1e-9));
}

TEST_CASE("integrate_to_infinity rejects non-decaying tails") {
  CHECK_THROWS_AS(quadrature::integrate_to_infinity(
                      [](double x) { return 1.0 / (1.0 + x); }, 1.0, 1e-8,
                      1e-12),
                  NumericalError);
}

TEST_CASE("golden section finds quadratic minimum") {
  auto [x, f] = optim::golden_section_min(
      [](double t) { return (t - 0.7) * (t - 0.7) + 3.0; }, 0.0, 2.0, 1e-8);
  CHECK(x == doctest::Approx(0.7).epsilon(1e-6));
  CHECK(f == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("grid_then_golden handles multimodal functions") {
  // Global minimum near t = 5.45 with a decoy local minimum near t = 2.36.
  const auto f = [](double t) {
    return std::sin(t * 2.0) + 0.1 * (t - 4.5) * (t - 4.5);
  };
  auto [x, fx] = optim::grid_then_golden_min(f, 0.0, 6.0, 64, 1e-8);
  CHECK(x == doctest::Approx(5.4503).epsilon(1e-3));
  CHECK(fx < f(2.36));
}
