#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/quadrature.hpp"
#include "aeris/special.hpp"

using namespace aeris;

namespace {

// Independent oracle for 1F1(-1/2; 1; -x) via the Bessel identity
//   1F1(-1/2;1;-x) = e^{-x/2} [(1+x) I0(x/2) + x I1(x/2)].
double kummer_half_oracle(double x) {
  return std::exp(-0.5 * x) * ((1.0 + x) * std::cyl_bessel_i(0.0, 0.5 * x) +
                               x * std::cyl_bessel_i(1.0, 0.5 * x));
}

}  // namespace

TEST_CASE("kummer_1f1 trivial arguments") {
  CHECK(special::kummer_1f1(-0.5, 1.0, 0.0) == doctest::Approx(1.0));
  // 1F1(a;b;z) with a=b reduces to e^z.
  CHECK(special::kummer_1f1(2.0, 2.0, 1.5) ==
        doctest::Approx(std::exp(1.5)).epsilon(1e-12));
  // 1F1(1;2;z) = (e^z - 1)/z.
  CHECK(special::kummer_1f1(1.0, 2.0, 0.7) ==
        doctest::Approx((std::exp(0.7) - 1.0) / 0.7).epsilon(1e-12));
}

TEST_CASE("kummer_1f1 matches the Bessel identity for the Rician mean") {
  for (double x : {0.1, 0.5, 1.0, 4.0, 10.0, 31.6227766, 100.0}) {
    CAPTURE(x);
    CHECK(special::kummer_1f1(-0.5, 1.0, -x) ==
          doctest::Approx(kummer_half_oracle(x)).epsilon(1e-10));
  }
}

TEST_CASE("i0_scaled against std::cyl_bessel_i in the overlap region") {
  for (double y : {0.0, 0.3, 1.0, 5.0, 14.9, 15.1, 40.0, 200.0, 500.0}) {
    CAPTURE(y);
    const double ref = std::cyl_bessel_i(0.0, y) * std::exp(-y);
    CHECK(special::i0_scaled(y) == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("noncentral chi-square, central special case") {
  // delta = 0 reduces to chi^2_1: F(x) = erf(sqrt(x/2)).
  for (double x : {0.1, 1.0, 3.84}) {
    CAPTURE(x);
    CHECK(special::noncentral_chi2_1_cdf(x, 0.0) ==
          doctest::Approx(std::erf(std::sqrt(0.5 * x))).epsilon(1e-12));
  }
  CHECK(special::noncentral_chi2_1_cdf(1.0, 0.0) ==
        doctest::Approx(0.6826894921370859).epsilon(1e-12));
}

TEST_CASE("noncentral chi-square cdf is the integral of the pdf") {
  for (double delta : {0.5, 4.0, 30.0}) {
    for (double x : {0.5, 3.0, 20.0, 60.0}) {
      CAPTURE(delta);
      CAPTURE(x);
      // Substituting t = u^2 removes the 1/sqrt(t) singularity at zero;
      // the u = 0 limit is sqrt(2/pi) e^{-delta/2}.
      const double by_quad = quadrature::adaptive_simpson(
          [&](double u) {
            if (u == 0.0) return std::sqrt(2.0 / M_PI) * std::exp(-0.5 * delta);
            return 2.0 * u * special::noncentral_chi2_1_pdf(u * u, delta);
          },
          0.0, std::sqrt(x), 1e-10);
      CHECK(special::noncentral_chi2_1_cdf(x, delta) ==
            doctest::Approx(by_quad).epsilon(1e-8));
    }
  }
}

TEST_CASE("noncentral chi-square moments via quadrature") {
  // E[X] = 1 + delta for one degree of freedom.
  const double delta = 12.0;
  const double mean = quadrature::integrate_to_infinity(
      [&](double t) { return t * special::noncentral_chi2_1_pdf(t, delta); },
      64.0, 1e-10, 1e-12);
  CHECK(mean == doctest::Approx(1.0 + delta).epsilon(1e-7));
}
