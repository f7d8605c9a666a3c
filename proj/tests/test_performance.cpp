#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/performance.hpp"

using namespace aeris;

namespace {

LinkEnvironment urban(double eta) {
  return LinkEnvironment::create(9.61, 0.16, -1.5, 3.5, eta, 31.6227766, 1.0,
                                 units::AngleUnit::Deg);
}

RadioConfig radio_fixture(double gamma0, double r0 = 0.0) {
  return RadioConfig::create(5e6, 3.16, 1.0, 1e-17, 7.9433e10, 1.26e-9,
                             gamma0, r0, urban(0.009), urban(0.01));
}

ModeContext context_fixture(int n, CascadeModel model = CascadeModel::Matched) {
  const auto geom =
      ScenarioGeometry::create(0, 0, 2000, 0, 800, 0, 350, 100, 500);
  return make_mode_context(geom, urban(0.009), urban(0.01),
                           radio_fixture(6.3096), n, model);
}

}  // namespace

TEST_CASE("radio derived composites against hand expressions") {
  const auto r = radio_fixture(6.3096);
  const double noise = 1e-17 * 5e6;
  CHECK(r.kappa_u ==
        doctest::Approx(7.9433e10 / 0.009 / (1.26e-9 + noise)).epsilon(1e-12));
  CHECK(r.kappa_d == doctest::Approx(7.9433e10 / 0.01 / noise).epsilon(1e-12));
  CHECK(r.gamma_prime_u ==
        doctest::Approx(6.3096 / (r.kappa_u * 3.16)).epsilon(1e-12));
  CHECK(r.I_u == doctest::Approx(3.16 * r.kappa_u).epsilon(1e-12));
  CHECK(r.I_d == doctest::Approx(1.0 * r.kappa_d).epsilon(1e-12));
  CHECK(r.V == doctest::Approx(7.9433e10 * 7.9433e10 * 3.16 /
                               (0.009 * 0.01 * noise))
                   .epsilon(1e-12));
}

TEST_CASE("threshold and rate are interchangeable") {
  const auto by_gamma = radio_fixture(6.3096);
  CHECK(by_gamma.r0 ==
        doctest::Approx(5e6 * std::log2(7.3096)).epsilon(1e-12));
  const auto by_rate = radio_fixture(0.0, by_gamma.r0);
  CHECK(by_rate.gamma0 == doctest::Approx(6.3096).epsilon(1e-12));
}

TEST_CASE("radio rejects invalid inputs") {
  const auto env = urban(0.01);
  CHECK_THROWS_AS(RadioConfig::create(0, 1, 1, 1e-17, 1, 0, 1, 0, env, env),
                  SchemaError);
  CHECK_THROWS_AS(RadioConfig::create(5e6, -1, 1, 1e-17, 1, 0, 1, 0, env, env),
                  SchemaError);
  CHECK_THROWS_AS(RadioConfig::create(5e6, 1, 1, 1e-17, 1, -1, 1, 0, env, env),
                  SchemaError);
}

TEST_CASE("UAV outage reduces to the two link cdfs") {
  const auto ctx = context_fixture(100);
  const double g0 = 6.3096;
  const double fu = rician_power_cdf(g0 / ctx.up.c, ctx.up.fading);
  const double fd = rician_power_cdf(g0 / ctx.down.c, ctx.down.fading);
  CHECK(outage_uav(ctx, g0) ==
        doctest::Approx(1.0 - (1.0 - fu) * (1.0 - fd)).epsilon(1e-12));
  CHECK(outage_uav(ctx, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(outage_uav(ctx, -1.0), SchemaError);
}

TEST_CASE("IRS outage, standardized variant, against the normal cdf") {
  const auto ctx = context_fixture(200);
  // Pick thresholds so the outage sweeps the whole (0,1) range:
  // Gamma0 = W (mu_Z + k sigma_Z)^2 puts s at mu_Z + k sigma_Z.
  const double mu = ctx.irs.clt.mu_z;
  const double sd = std::sqrt(ctx.irs.clt.sigma_z2);
  const auto phi = [](double t) {
    return 0.5 * (1.0 + std::erf(t / std::sqrt(2.0)));
  };
  for (double k : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
    CAPTURE(k);
    const double s = mu + k * sd;
    const double g0 = ctx.irs.W * s * s;
    // P(-s < Z < s) for Z ~ N(mu_Z, sigma_Z^2).
    const double ref = phi((s - mu) / sd) - phi((-s - mu) / sd);
    CHECK(outage_irs(ctx.irs, g0) == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("IRS outage, printed variant, direct transcription") {
  IrsBudget b;
  b.W = 2.0;
  b.clt.mu_z = 3.0;
  b.clt.sigma_z2 = 1.0;
  b.clt.lambda = 4.5;
  b.clt.lambda_prime = 4.5;
  const double g0 = 5.0;
  const double s = std::sqrt(g0 / b.W);
  const double rl = std::sqrt(b.clt.lambda);
  const double ref = 0.5 * (std::erf((s - rl) / std::sqrt(2.0)) +
                            std::erf((s + rl) / std::sqrt(2.0)));
  CHECK(outage_irs(b, g0, IrsOutageVariant::Printed) ==
        doctest::Approx(ref).epsilon(1e-12));
  // With sigma_Z = 1 the standardized variant uses mu_Z = sqrt(2 lambda)
  // and therefore gives a different (correctly centered) value.
  const double std_ref = 0.5 * (std::erf((s - 3.0) / std::sqrt(2.0)) +
                                std::erf((s + 3.0) / std::sqrt(2.0)));
  CHECK(outage_irs(b, g0, IrsOutageVariant::Standardized) ==
        doctest::Approx(std_ref).epsilon(1e-12));
}

TEST_CASE("integrated outage is the product of branches") {
  CHECK(outage_integrated(0.2, 0.3) == doctest::Approx(0.06));
  CHECK(outage_integrated(0.0, 1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(outage_integrated(-0.1, 0.5), SchemaError);
  const auto ctx = context_fixture(50);
  const double o = outage_integrated(outage_uav(ctx, 6.3096),
                                     outage_irs(ctx.irs, 6.3096));
  CHECK(o <= outage_uav(ctx, 6.3096));
  CHECK(o <= outage_irs(ctx.irs, 6.3096));
}

TEST_CASE("ergodic capacity on analytic outage laws") {
  // O(g) = g/(1+g): 1 - O(2^w - 1) = 2^-w, so C = B / ln 2.
  const double B = 5e6;
  CHECK(ergodic_capacity_exact([](double g) { return g / (1.0 + g); }, B) ==
        doctest::Approx(B / std::log(2.0)).epsilon(1e-5));
  // Step outage at g* = 10: C = B log2(1 + 10).
  CHECK(ergodic_capacity_exact(
            [](double g) { return g >= 10.0 ? 1.0 : 0.0; }, B, 1.0) ==
        doctest::Approx(B * std::log2(11.0)).epsilon(1e-6));
}

TEST_CASE("capacity bounds dominate the exact capacity") {
  const auto ctx = context_fixture(150);
  const double c_uav = ergodic_capacity_exact(
      [&](double g) { return outage_uav(ctx, g); }, ctx.B);
  const double c_irs = ergodic_capacity_exact(
      [&](double g) { return outage_irs(ctx.irs, g); }, ctx.B);
  const double c_int = ergodic_capacity_exact(
      [&](double g) {
        return outage_integrated(outage_uav(ctx, g), outage_irs(ctx.irs, g));
      },
      ctx.B);
  CHECK(capacity_bound_uav(ctx) >= c_uav);
  CHECK(capacity_bound_irs(ctx.irs, ctx.B) >= c_irs);
  CHECK(capacity_bound_integrated(ctx) >= c_int);
  // Selection combining can only help.
  CHECK(c_int >= c_uav);
  CHECK(c_int >= c_irs);
}

TEST_CASE("matched context carries the physical N-element scaling") {
  const auto ctx = context_fixture(120, CascadeModel::Matched);
  const auto fu = RicianFading::create(31.6227766, 1.0);
  const auto m = double_rician_moments(fu, fu, MomentConvention::Matched);
  CHECK(ctx.irs.clt.mu_z == doctest::Approx(120.0 * m.mean).epsilon(1e-12));
  CHECK(ctx.irs.clt.sigma_z2 ==
        doctest::Approx(120.0 * m.variance).epsilon(1e-12));
  const auto printed = context_fixture(120, CascadeModel::Printed);
  CHECK(printed.irs.clt.mu_z > ctx.irs.clt.mu_z);
}

TEST_CASE("energy efficiency") {
  CHECK(energy_efficiency(1e7, 200.0) == doctest::Approx(5e4));
  CHECK_THROWS_AS(energy_efficiency(1e7, 0.0), SchemaError);
}
