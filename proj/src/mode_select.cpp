#include "aeris/mode_select.hpp"

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/quadrature.hpp"

namespace aeris {

double selection_probability_irs(const ModeContext& ctx, double p_uav_w,
                                 double p_irs_w) {
  if (!(p_uav_w > 0 && p_irs_w > 0))
    throw SchemaError("selection_probability_irs: powers must be > 0");
  const double ratio = p_irs_w / p_uav_w;
  const LinkBudget& up = ctx.up;
  const LinkBudget& dn = ctx.down;

  // Density of Gamma_UAV = min(c_u X_u, c_d X_d) by order statistics.
  const auto f_uav = [&](double z) {
    const double fu = rician_power_cdf(z / up.c, up.fading);
    const double fd = rician_power_cdf(z / dn.c, dn.fading);
    const double du = rician_power_pdf(z / up.c, up.fading) / up.c;
    const double dd = rician_power_pdf(z / dn.c, dn.fading) / dn.c;
    return (1.0 - fu) * dd + (1.0 - fd) * du;
  };
  const auto integrand = [&](double z) {
    if (z <= 0.0) return 0.0;
    return outage_irs(ctx.irs, z * ratio, IrsOutageVariant::Standardized) *
           f_uav(z);
  };

  const double scale = std::min(up.c * up.fading.Omega, dn.c * dn.fading.Omega);
  const double prob_not = quadrature::integrate_to_infinity(
      integrand, std::max(scale, 1e-30), 1e-8, 1e-9);
  double p = 1.0 - prob_not;
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  return p;
}

ElementThreshold element_threshold(const ModeContext& ctx, double p_u_w,
                                   double p_d_w, const PowerModel& power) {
  // Printed model quantities: M = min of UAV mean SNRs, WG = W (per-element
  // scaling handled by lambda'). C is the shared circuit+hover term.
  const double M = std::min(ctx.up.c * ctx.up.fading.Omega,
                            ctx.down.c * ctx.down.fading.Omega);
  const double W = ctx.irs.W;
  const double nu = ctx.irs.clt.nu;
  const double lp = ctx.irs.clt.lambda_prime;
  const double C = power.p_c + hover_power(power) + 2.0 * power.p_bs;
  const double p_r = power.p_r_element;
  const double p_uav_total = p_u_w + p_d_w + C;

  const double denom = lp * p_uav_total * W - p_r * M;
  if (denom == 0.0)
    throw NumericalError("element_threshold: zero denominator (knife-edge)");
  const double numer = (p_u_w - p_r + C) * M - nu * p_uav_total * W;
  ElementThreshold t;
  t.n_th = numer / denom - 1.0;
  t.denom_sign = denom > 0 ? 1 : -1;
  return t;
}

SelectionReport select_mode_by_optimal_heights(
    const ScenarioGeometry& geom, const LinkEnvironment& env_u,
    const LinkEnvironment& env_d, const RadioConfig& radio,
    const PowerModel& power, int n_elements, const QtOptions& opt) {
  PowerModel pm = power;
  pm.n_elements = n_elements;
  const double p_uav_w = mode_power(RelayMode::UAV, radio.p_u, radio.p_d, pm);
  const double p_irs_w = mode_power(RelayMode::IRS, radio.p_u, radio.p_d, pm);

  // Cascade mean-power factor for the IRS EE report (matched model).
  const ProductMoments m = double_rician_moments(
      RicianFading::create(env_u.K, env_u.Omega),
      RicianFading::create(env_d.K, env_d.Omega), MomentConvention::Matched);
  const double n = n_elements;
  const double mean_x = n * n * m.mean * m.mean + n * m.variance;  // E[Z^2]

  IrsHeightProblem ip;
  ip.zhat_u = geom.zhat_u;
  ip.zhat_d = geom.zhat_d;
  ip.env_u = env_u;
  ip.env_d = env_d;
  ip.h_min = geom.h_min;
  ip.h_max = geom.h_max;
  ip.B = radio.B;
  ip.v_gain = radio.V;
  ip.mean_x = mean_x;
  ip.p_total = p_irs_w;
  const OptReport r_irs = optimize_irs_height(ip, opt);

  UavHeightProblem up;
  up.zhat_u = geom.zhat_u;
  up.zhat_d = geom.zhat_d;
  up.env_u = env_u;
  up.env_d = env_d;
  up.h_min = geom.h_min;
  up.h_max = geom.h_max;
  up.I_u = radio.I_u;
  up.I_d = radio.I_d;
  up.B = radio.B;
  up.p_total = p_uav_w;
  const OptReport r_uav = optimize_uav_height(up, opt);

  SelectionReport rep;
  rep.ee_irs = r_irs.ee_at_opt;
  rep.ee_uav = r_uav.ee_at_opt;
  rep.h_irs = r_irs.x_star;
  rep.h_uav = r_uav.x_star;
  rep.chosen = rep.ee_irs >= rep.ee_uav ? "IRS" : "UAV";
  return rep;
}

}  // namespace aeris
