#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/optimizer.hpp"

using namespace aeris;

namespace {

LinkEnvironment urban() {
  return LinkEnvironment::create(9.61, 0.16, -1.5, 3.5, 0.009, 31.6227766,
                                 1.0, units::AngleUnit::Deg);
}

IrsElementProblem element_fixture() {
  IrsElementProblem p;
  p.W = 1e-3;
  p.lambda_prime = 24.95;
  p.nu = 1.0;
  p.B = 5e6;
  p.p_u = 3.16;
  p.P_r = 1.08;
  p.C = 180.0;
  p.n_min = 20;
  p.n_max = 500;
  return p;
}

double second_difference(const std::function<double(double)>& f, double x,
                         double dh) {
  return (f(x + dh) - 2.0 * f(x) + f(x - dh)) / (dh * dh);
}

}  // namespace

TEST_CASE("single-ratio engine maximizes x/(1+x^2)") {
  const auto rep = qt_single_ratio_max([](double x) { return x; },
                                       [](double x) { return 1.0 + x * x; },
                                       0.1, 5.0);
  CHECK(rep.x_star == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(rep.objective == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rep.monotone);
  CHECK_FALSE(rep.used_fallback);
  // Auxiliary variable converged to sqrt(O*)/R* = 1/2.
  CHECK(rep.y_trajectory.back() == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("single-ratio engine guards its premises") {
  CHECK_THROWS_AS(
      qt_single_ratio_max([](double x) { return x; },
                          [](double x) { return x - 2.0; }, 0.0, 5.0),
      InfeasibleError);
  CHECK_THROWS_AS(
      qt_single_ratio_max([](double x) { return x - 1.0; },
                          [](double) { return 1.0; }, 0.0, 5.0),
      InfeasibleError);
  CHECK_THROWS_AS(qt_single_ratio_max([](double) { return 1.0; },
                                      [](double) { return 1.0; }, 2.0, 2.0),
                  SchemaError);
}

TEST_CASE("element optimizer agrees with integer brute force") {
  const auto p = element_fixture();
  const auto rep = optimize_irs_elements(p);
  long best_n = p.n_min;
  double best_ee = irs_ee_printed(p, p.n_min);
  for (long n = p.n_min + 1; n <= p.n_max; ++n) {
    const double ee = irs_ee_printed(p, static_cast<double>(n));
    if (ee > best_ee) {
      best_ee = ee;
      best_n = n;
    }
  }
  // Interior optimum, off both clamps.
  CHECK(best_n > p.n_min);
  CHECK(best_n < p.n_max);
  CHECK(std::abs(rep.x_star - static_cast<double>(best_n)) <= 1.0);
  CHECK(rep.ee_at_opt == doctest::Approx(best_ee).epsilon(1e-6));
  CHECK(rep.monotone);
}

TEST_CASE("element optimizer rejects degenerate inputs") {
  auto p = element_fixture();
  p.lambda_prime = 0.0;
  CHECK_THROWS_AS(optimize_irs_elements(p), InfeasibleError);
  p = element_fixture();
  p.n_min = p.n_max;
  CHECK_THROWS_AS(optimize_irs_elements(p), SchemaError);
}

TEST_CASE("minimum-power element count brackets the rate constraint") {
  const auto p = element_fixture();
  const double r0 = 0.7 * irs_capacity_printed(p, 0.5 * (p.n_min + p.n_max));
  const int n = min_power_elements(p, r0);
  CHECK(n > p.n_min);
  CHECK(n < p.n_max);
  CHECK(irs_capacity_printed(p, n) >= r0);
  CHECK(irs_capacity_printed(p, n - 1) < r0);
  // Printed form (square-rooted SNR) under-provisions here.
  CHECK(min_power_elements(p, r0, MinPowerForm::Printed) <= n);
  // Unreachable rates are flagged instead of silently clamped.
  CHECK_THROWS_AS(
      min_power_elements(p, 10.0 * irs_capacity_printed(p, p.n_max)),
      InfeasibleError);
}

TEST_CASE("minimum uplink power closes the rate constraint exactly") {
  auto p = element_fixture();
  const double r0 = 0.8 * irs_capacity_printed(p, 300.0);
  const double p_star = min_power_uplink(p, r0, 300);
  // Rescale W with the uplink power and re-evaluate the capacity.
  auto scaled = p;
  scaled.W = p.W / p.p_u * p_star;
  scaled.p_u = p_star;
  CHECK(irs_capacity_printed(scaled, 300.0) ==
        doctest::Approx(r0).epsilon(1e-9));
}

TEST_CASE("IRS height optimizer lands on the dense-scan optimum") {
  IrsHeightProblem p;
  p.zhat_u = 1400;
  p.zhat_d = 1600;
  p.env_u = p.env_d = urban();
  p.h_min = 80;
  p.h_max = 150;
  const auto rep = optimize_irs_height(p);
  CHECK(rep.exhaustive_ran);
  // Within one metre of the 1 m dense scan of the same objective.
  CHECK(std::abs(rep.x_star - rep.exh_approx_x) <= 1.0);
  CHECK(rep.objective <= rep.exh_approx_obj + 1e-9 * std::abs(rep.exh_approx_obj));
  CHECK_THROWS_AS(
      [] {
        IrsHeightProblem bad;
        bad.env_u = bad.env_d = urban();
        bad.h_min = 100;
        bad.h_max = 50;
        return optimize_irs_height(bad);
      }(),
      SchemaError);
}

TEST_CASE("UAV height optimizer lands on the dense-scan optimum") {
  UavHeightProblem p;
  p.zhat_u = 800;
  p.zhat_d = 1200;
  p.env_u = p.env_d = urban();
  p.h_min = 1500;
  p.h_max = 2500;
  p.I_u = 1.01e5;
  p.I_d = 1.0e6;
  const auto rep = optimize_uav_height(p);
  CHECK(std::abs(rep.x_star - rep.exh_approx_x) <= 1.0);
  CHECK(rep.objective >= rep.exh_approx_obj - 1e-9 * std::abs(rep.exh_approx_obj));
  // Mean SNR above 0 dB breaks the sign-flip premise and must be refused.
  auto hot = p;
  hot.I_u = 1e30;
  CHECK_THROWS_AS(optimize_uav_height(hot), InfeasibleError);
}

TEST_CASE("Prop-4 guard agrees with the finite-difference curvature sign") {
  const auto env = urban();
  for (double zhat : {1400.0, 1600.0}) {
    const auto verdict = check_concavity_irs(zhat, env, 80, 150);
    CHECK(verdict.satisfied);
    // Eq.-(42) objective is convex on this range: f'' >= 0.
    for (double h : {85.0, 115.0, 145.0}) {
      CAPTURE(zhat);
      CAPTURE(h);
      const double f2 = second_difference(
          [&](double t) { return qt_O_irs(t, zhat, env); }, h, 0.5);
      CHECK(f2 >= 0.0);
    }
  }
}

TEST_CASE("Prop-5 guard agrees with the finite-difference curvature sign") {
  const auto env = urban();
  struct Case {
    double zhat, I;
  };
  for (const auto& c : {Case{800.0, 1.01e5}, Case{1200.0, 1.0e6}}) {
    const auto verdict = check_concavity_uav(c.zhat, env, c.I, 1500, 2500);
    CHECK(verdict.satisfied);
    for (double h : {1600.0, 2000.0, 2400.0}) {
      CAPTURE(c.zhat);
      CAPTURE(h);
      const double f2 = second_difference(
          [&](double t) { return qt_O_uav(t, c.zhat, env, c.I); }, h, 1.0);
      CHECK(f2 <= 0.0);
    }
  }
}
