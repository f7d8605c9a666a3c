#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/mc_kernel.hpp"
#include "aeris/montecarlo.hpp"
#include "aeris/scenario.hpp"

using namespace aeris;

namespace {

const double kGamma0 = units::db_to_linear(8.0);

// Default scenario gives a non-degenerate UAV outage (~6e-3).
ModeContext context_fixture(int n) {
  auto s = load_scenario(std::string(AERIS_SCENARIO_DIR) + "/default.json");
  apply_sweep_value(s, "n_elements", static_cast<double>(n));
  return s.context();
}

}  // namespace

TEST_CASE("same seed reproduces the result bit for bit") {
  const auto ctx = context_fixture(40);
  SimPlan plan;
  plan.trials = 20000;
  plan.seed = 77;
  const auto a = simulate_all_modes(ctx, kGamma0, 1.0, plan);
  const auto b = simulate_all_modes(ctx, kGamma0, 1.0, plan);
  CHECK(a.uav.outage.value == b.uav.outage.value);
  CHECK(a.irs.capacity.value == b.irs.capacity.value);
  CHECK(a.integrated.mean_snr.value == b.integrated.mean_snr.value);
  CHECK(a.irs_select.value == b.irs_select.value);
  plan.seed = 78;
  const auto c = simulate_all_modes(ctx, kGamma0, 1.0, plan);
  CHECK(c.uav.outage.value != a.uav.outage.value);
}

TEST_CASE("estimates do not depend on the OpenMP worker count") {
  const auto ctx = context_fixture(40);
  SimPlan plan;
  plan.trials = 20000;
  plan.seed = 5;
  omp_set_num_threads(1);
  const auto serial = simulate_all_modes(ctx, kGamma0, 1.0, plan);
  omp_set_num_threads(4);
  const auto threaded = simulate_all_modes(ctx, kGamma0, 1.0, plan);
  CHECK(serial.uav.outage.value == threaded.uav.outage.value);
  CHECK(serial.irs.outage.value == threaded.irs.outage.value);
  CHECK(serial.integrated.capacity.value == threaded.integrated.capacity.value);
}

TEST_CASE("fast and reference kernels agree on identical uniforms") {
  auto gen = rng::trial_stream(11, 0);
  for (int n : {1, 7, 64, 333}) {
    std::vector<double> u(static_cast<std::size_t>(4) * n);
    for (double& x : u) x = gen.uniform_pos();
    const double a = mc::cascade_sum_ref(u.data(), n, 0.9, 0.2, 0.7, 0.3);
    const double b = mc::cascade_sum_fast(u.data(), n, 0.9, 0.2, 0.7, 0.3);
    CAPTURE(n);
    CHECK(b == doctest::Approx(a).epsilon(1e-12));
  }
}

TEST_CASE("fast-kernel simulation matches the reference-kernel closed forms") {
  const auto ctx = context_fixture(60);
  SimPlan fast, ref;
  fast.trials = ref.trials = 50000;
  fast.seed = ref.seed = 9;
  ref.fast_kernel = false;
  const auto a = simulate_all_modes(ctx, kGamma0, 1.0, fast);
  const auto b = simulate_all_modes(ctx, kGamma0, 1.0, ref);
  // Same streams, numerically equivalent kernels.
  CHECK(a.irs.outage.value == doctest::Approx(b.irs.outage.value));
  CHECK(a.irs.mean_snr.value ==
        doctest::Approx(b.irs.mean_snr.value).epsilon(1e-10));
}

TEST_CASE("outage estimate converges on the closed form") {
  const auto ctx = context_fixture(40);
  SimPlan plan;
  plan.trials = 400000;
  plan.seed = 20260824;
  const auto r = simulate_all_modes(ctx, kGamma0, 1.0, plan);
  const double closed_u = outage_uav(ctx, kGamma0);
  CHECK(std::abs(r.uav.outage.value - closed_u) <=
        4.0 * std::max(r.uav.outage.se, 1e-9));
  // Integrated outage identity holds per-trial by construction.
  CHECK(r.integrated.outage.value <= r.uav.outage.value);
  CHECK(r.integrated.outage.value <= r.irs.outage.value);
}

TEST_CASE("standard error shrinks like one over root trials") {
  const auto ctx = context_fixture(40);
  SimPlan small, large;
  small.trials = 20000;
  large.trials = 320000;  // 16x
  small.seed = large.seed = 3;
  const auto a = simulate_all_modes(ctx, kGamma0, 1.0, small);
  const auto b = simulate_all_modes(ctx, kGamma0, 1.0, large);
  CHECK(a.uav.outage.se / b.uav.outage.se == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("trial floor is enforced") {
  const auto ctx = context_fixture(40);
  SimPlan plan;
  plan.trials = 100;
  CHECK_THROWS_AS(simulate_all_modes(ctx, kGamma0, 1.0, plan), SchemaError);
}

TEST_CASE("cascade histogram carries unit mass and matches the CLT mean") {
  const auto fd = RicianFading::create(31.6227766, 1.0);
  const auto h = empirical_pdf_of_cascade_power(fd, fd, 20, 100000, 123);
  double mass = h.overflow_mass;
  double mean = 0.0;
  for (std::size_t i = 0; i < h.density.size(); ++i) {
    const double x = h.lo + (i + 0.5) * h.width;
    mass += h.density[i] * h.width;
    mean += x * h.density[i] * h.width;
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  // E[(Z/sigma_Z)^2] = 1 + mu_Z^2/sigma_Z^2 under the normal limit.
  const auto m = double_rician_moments(fd, fd, MomentConvention::Matched);
  const double delta = 20.0 * m.mean * m.mean / m.variance;
  CHECK(mean == doctest::Approx(1.0 + delta).epsilon(0.02));
  CHECK_THROWS_AS(empirical_pdf_of_cascade_power(fd, fd, 0, 100000, 1),
                  SchemaError);
}
