#include "aeris/special.hpp"

#include <cmath>
#include <string>

#include "aeris/errors.hpp"
#include "aeris/units.hpp"

namespace aeris::special {

namespace {

double kummer_series(double a, double b, double z) {
  // Plain power series; callers guarantee z <= 0 is avoided.
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 500; ++n) {
    term *= (a + n) / (b + n) * z / (n + 1);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw NumericalError("1F1 series failed to converge (a=" + std::to_string(a) +
                       ", b=" + std::to_string(b) + ", z=" + std::to_string(z) +
                       ")");
}

}  // namespace

double kummer_1f1(double a, double b, double z) {
  if (b <= 0.0 && b == std::floor(b))
    throw NumericalError("1F1 undefined for non-positive integer b");
  if (z == 0.0) return 1.0;
  if (z < 0.0) {
    // Kummer transform keeps every series term positive when b-a > 0.
    return std::exp(z) * kummer_series(b - a, b, -z);
  }
  return kummer_series(a, b, z);
}

double i0_scaled(double y) {
  y = std::abs(y);
  if (y < 15.0) {
    // I0 series in (y/2)^2, then scale.
    const double q = 0.25 * y * y;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 200; ++n) {
      term *= q / (static_cast<double>(n) * n);
      sum += term;
      if (term <= 1e-17 * sum) break;
    }
    return std::exp(-y) * sum;
  }
  // Asymptotic expansion I0(y) ~ e^y / sqrt(2 pi y) * sum_k a_k / y^k.
  const double inv = 1.0 / y;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 12; ++k) {
    const double num = (2.0 * k - 1.0) * (2.0 * k - 1.0);
    term *= num * inv / (8.0 * k);
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum / std::sqrt(2.0 * units::kPi * y);
}

double noncentral_chi2_1_pdf(double x, double delta) {
  if (x <= 0.0) return 0.0;
  const double sx = std::sqrt(x);
  const double sd = std::sqrt(delta);
  const double a = sx - sd;
  const double b = sx + sd;
  return (std::exp(-0.5 * a * a) + std::exp(-0.5 * b * b)) /
         (2.0 * std::sqrt(2.0 * units::kPi * x));
}

double noncentral_chi2_1_cdf(double x, double delta) {
  if (x <= 0.0) return 0.0;
  const double sx = std::sqrt(x);
  const double sd = std::sqrt(delta);
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  return 0.5 * (std::erf((sx - sd) * inv_sqrt2) + std::erf((sx + sd) * inv_sqrt2));
}

}  // namespace aeris::special
