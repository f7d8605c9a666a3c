#include "aeris/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "aeris/errors.hpp"
#include "aeris/mc_kernel.hpp"
#include "aeris/special.hpp"
#include "aeris/units.hpp"

namespace aeris {

namespace {

constexpr long kBlock = 4096;

struct Moments {
  double sum = 0, sum2 = 0;
  void add(double x) {
    sum += x;
    sum2 += x * x;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sum2 += o.sum2;
  }
};

struct BlockAcc {
  Moments out_uav, out_irs, out_int;   // indicator moments (0/1 or averages)
  Moments cap_uav, cap_irs, cap_int;
  Moments snr_uav, snr_irs, snr_int;
  Moments select;
  void merge(const BlockAcc& o) {
    out_uav.merge(o.out_uav);
    out_irs.merge(o.out_irs);
    out_int.merge(o.out_int);
    cap_uav.merge(o.cap_uav);
    cap_irs.merge(o.cap_irs);
    cap_int.merge(o.cap_int);
    snr_uav.merge(o.snr_uav);
    snr_irs.merge(o.snr_irs);
    snr_int.merge(o.snr_int);
    select.merge(o.select);
  }
};

Estimate finish(const Moments& m, double n) {
  Estimate e;
  e.value = m.sum / n;
  const double var = std::max(0.0, m.sum2 / n - e.value * e.value);
  e.se = std::sqrt(var / n);
  return e;
}

struct TrialDraw {
  double g_uav = 0, g_irs = 0;
};

// Draws one trial's mode SNRs. `mirror` flips every uniform (antithetic).
TrialDraw draw_trial(const ModeContext& ctx, std::uint64_t seed,
                     std::uint64_t trial, bool fast, bool mirror,
                     std::vector<double>& ubuf) {
  const RicianFading& fu = ctx.up.fading;
  const RicianFading& fd = ctx.down.fading;
  const double mu_u = fu.mu(), s_u = std::sqrt(fu.sigma_scatter2());
  const double mu_d = fd.mu(), s_d = std::sqrt(fd.sigma_scatter2());

  auto mirrored = [&](double u) {
    if (!mirror) return u;
    const double v = 1.0 - u;
    return v > 0x1.0p-53 ? v : 0x1.0p-53;
  };

  auto direct_power = [&](rng::Xoshiro256pp& g, double mu, double s) {
    const double u1 = mirrored(g.uniform_pos());
    const double u2 = mirrored(g.uniform());
    const double r = -2.0 * std::log(u1);
    const double c = std::cos(2.0 * units::kPi * u2);
    return mu * mu + 2.0 * mu * s * std::sqrt(r) * c + s * s * r;
  };

  TrialDraw d;
  rng::Xoshiro256pp ga = rng::trial_stream(seed, trial, 0);
  const double x_u = direct_power(ga, mu_u, s_u);
  const double x_d = direct_power(ga, mu_d, s_d);
  d.g_uav = std::min(ctx.up.c * x_u, ctx.down.c * x_d);

  const int n = ctx.irs.n_elements;
  if (n > 0) {
    rng::Xoshiro256pp gb = rng::trial_stream(seed, trial, 1);
    ubuf.resize(static_cast<std::size_t>(4) * n);
    for (double& u : ubuf) u = mirrored(gb.uniform_pos());
    const double z = fast ? mc::cascade_sum_fast(ubuf.data(), n, mu_u, s_u,
                                                 mu_d, s_d)
                          : mc::cascade_sum_ref(ubuf.data(), n, mu_u, s_u,
                                                mu_d, s_d);
    d.g_irs = ctx.irs.W * z * z;
  }
  return d;
}

}  // namespace

SimResult simulate_all_modes(const ModeContext& ctx, double gamma0,
                             double power_ratio, const SimPlan& plan) {
  if (plan.trials < SimPlan::kMinTrials)
    throw SchemaError("simulate_all_modes: trials below floor");
  const long obs_n =
      plan.antithetic ? plan.trials / 2 : plan.trials;  // observations
  const long n_blocks = (obs_n + kBlock - 1) / kBlock;
  std::vector<BlockAcc> accs(n_blocks);
  const double B = ctx.B;

#pragma omp parallel
  {
    std::vector<double> ubuf;
#pragma omp for schedule(static)
    for (long blk = 0; blk < n_blocks; ++blk) {
      BlockAcc acc;
      const long lo = blk * kBlock;
      const long hi = std::min(obs_n, lo + kBlock);
      for (long i = lo; i < hi; ++i) {
        TrialDraw d = draw_trial(ctx, plan.seed, static_cast<std::uint64_t>(i),
                                 plan.fast_kernel, false, ubuf);
        double ou = d.g_uav < gamma0 ? 1.0 : 0.0;
        double oi = d.g_irs < gamma0 ? 1.0 : 0.0;
        double g_int = std::max(d.g_uav, d.g_irs);
        double on = g_int < gamma0 ? 1.0 : 0.0;
        double cu = B * std::log2(1.0 + d.g_uav);
        double ci = B * std::log2(1.0 + d.g_irs);
        double cn = B * std::log2(1.0 + g_int);
        double su = d.g_uav, si = d.g_irs, sn = g_int;
        double sel = d.g_irs >= d.g_uav * power_ratio ? 1.0 : 0.0;
        if (plan.antithetic) {
          TrialDraw m = draw_trial(ctx, plan.seed,
                                   static_cast<std::uint64_t>(i),
                                   plan.fast_kernel, true, ubuf);
          const double g_int_m = std::max(m.g_uav, m.g_irs);
          ou = 0.5 * (ou + (m.g_uav < gamma0 ? 1.0 : 0.0));
          oi = 0.5 * (oi + (m.g_irs < gamma0 ? 1.0 : 0.0));
          on = 0.5 * (on + (g_int_m < gamma0 ? 1.0 : 0.0));
          cu = 0.5 * (cu + B * std::log2(1.0 + m.g_uav));
          ci = 0.5 * (ci + B * std::log2(1.0 + m.g_irs));
          cn = 0.5 * (cn + B * std::log2(1.0 + g_int_m));
          su = 0.5 * (su + m.g_uav);
          si = 0.5 * (si + m.g_irs);
          sn = 0.5 * (sn + g_int_m);
          sel = 0.5 * (sel + (m.g_irs >= m.g_uav * power_ratio ? 1.0 : 0.0));
        }
        acc.out_uav.add(ou);
        acc.out_irs.add(oi);
        acc.out_int.add(on);
        acc.cap_uav.add(cu);
        acc.cap_irs.add(ci);
        acc.cap_int.add(cn);
        acc.snr_uav.add(su);
        acc.snr_irs.add(si);
        acc.snr_int.add(sn);
        acc.select.add(sel);
      }
      accs[blk] = acc;
    }
  }

  BlockAcc total;
  for (const BlockAcc& a : accs) total.merge(a);

  const double n = static_cast<double>(obs_n);
  SimResult r;
  r.trials = plan.trials;
  r.uav = {finish(total.out_uav, n), finish(total.cap_uav, n),
           finish(total.snr_uav, n)};
  r.irs = {finish(total.out_irs, n), finish(total.cap_irs, n),
           finish(total.snr_irs, n)};
  r.integrated = {finish(total.out_int, n), finish(total.cap_int, n),
                  finish(total.snr_int, n)};
  r.irs_select = finish(total.select, n);
  return r;
}

Histogram empirical_pdf_of_cascade_power(const RicianFading& fu,
                                         const RicianFading& fd,
                                         int n_elements, long samples,
                                         std::uint64_t seed, int bins) {
  if (n_elements < 1)
    throw SchemaError("empirical_pdf_of_cascade_power: N must be >= 1");
  const ProductMoments m =
      double_rician_moments(fu, fd, MomentConvention::Matched);
  const double sigma_z2 = n_elements * m.variance;
  const double mu_z = n_elements * m.mean;
  const double delta = mu_z * mu_z / sigma_z2;  // noncentrality of (Z/s)^2

  // Upper edge at the 1-1e-4 quantile of the limiting distribution.
  double lo_q = 0.0, hi_q = delta + 40.0 * std::sqrt(2.0 * (1 + 2 * delta));
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo_q + hi_q);
    if (special::noncentral_chi2_1_cdf(mid, delta) < 1.0 - 1e-4)
      lo_q = mid;
    else
      hi_q = mid;
  }
  const double x_hi = hi_q;
  const double width = x_hi / bins;

  const long n_blocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::vector<long>> counts(n_blocks);
  std::vector<long> over(n_blocks, 0);
#pragma omp parallel for schedule(static)
  for (long blk = 0; blk < n_blocks; ++blk) {
    std::vector<long> c(bins, 0);
    const long lo = blk * kBlock;
    const long hi = std::min(samples, lo + kBlock);
    long ov = 0;
    for (long i = lo; i < hi; ++i) {
      rng::Xoshiro256pp g = rng::trial_stream(seed, i, 1);
      const double z = sample_cascade_amplitude(fu, fd, n_elements, g);
      const double x = z * z / sigma_z2;
      const int bin = static_cast<int>(x / width);
      if (bin >= 0 && bin < bins)
        ++c[bin];
      else
        ++ov;
    }
    counts[blk] = std::move(c);
    over[blk] = ov;
  }

  Histogram h;
  h.lo = 0.0;
  h.width = width;
  h.samples = samples;
  h.density.assign(bins, 0.0);
  long overflow = 0;
  for (long blk = 0; blk < n_blocks; ++blk) {
    for (int bn = 0; bn < bins; ++bn) h.density[bn] += counts[blk][bn];
    overflow += over[blk];
  }
  for (double& d : h.density) d /= (static_cast<double>(samples) * width);
  h.overflow_mass = static_cast<double>(overflow) / samples;
  return h;
}

}  // namespace aeris
