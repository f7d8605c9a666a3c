#pragma once

#include <cstdint>
#include <vector>

#include "aeris/performance.hpp"

namespace aeris {

struct SimPlan {
  long trials = 1000000;
  std::uint64_t seed = 1;
  bool antithetic = false;
  bool fast_kernel = true;

  static constexpr long kMinTrials = 10000;
};

struct Estimate {
  double value = 0;
  double se = 0;
};

struct ModeEstimates {
  Estimate outage;
  Estimate capacity;  // bps
  Estimate mean_snr;  // linear
};

struct SimResult {
  ModeEstimates uav, irs, integrated;
  // Frequency of Gamma_IRS >= Gamma_UAV * power_ratio (Eq. 53 event).
  Estimate irs_select;
  long trials = 0;
};

// One pass over `trials` fading draws producing all three mode estimates.
// power_ratio = P_IRS / P_UAV for the selection-frequency counter.
// Deterministic for fixed (plan.seed, trials, ctx): each trial owns a
// counter-based RNG stream and blocks reduce in fixed order, so results do
// not depend on the OpenMP worker count.
SimResult simulate_all_modes(const ModeContext& ctx, double gamma0,
                             double power_ratio, const SimPlan& plan);

struct Histogram {
  double lo = 0, width = 0;
  std::vector<double> density;  // per-bin probability mass / width
  double overflow_mass = 0;
  long samples = 0;
};

// Normalized histogram of the standardized squared cascade (Z/sigma_Z)^2
// under the matched convention, for overlay against the Eq.-(20)
// noncentral-chi-square density.
Histogram empirical_pdf_of_cascade_power(const RicianFading& fading_u,
                                         const RicianFading& fading_d,
                                         int n_elements, long samples,
                                         std::uint64_t seed, int bins = 60);

}  // namespace aeris
