#include "aeris/performance.hpp"

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/quadrature.hpp"
#include "aeris/units.hpp"

namespace aeris {

RadioConfig RadioConfig::create(double B, double p_u_w, double p_d_w,
                                double n0, double a_hat, double r_si_w,
                                double gamma0, double r0,
                                const LinkEnvironment& env_u,
                                const LinkEnvironment& env_d) {
  if (!(B > 0)) throw SchemaError("radio: bandwidth must be > 0");
  if (!(n0 > 0)) throw SchemaError("radio: noise density must be > 0");
  if (!(p_u_w >= 0 && p_d_w >= 0))
    throw SchemaError("radio: powers must be >= 0");
  if (!(a_hat > 0)) throw SchemaError("radio: system gain must be > 0");
  if (r_si_w < 0) throw SchemaError("radio: residual SI must be >= 0");
  RadioConfig r;
  r.B = B;
  r.p_u = p_u_w;
  r.p_d = p_d_w;
  r.n0 = n0;
  r.a_hat = a_hat;
  r.r_si = r_si_w;
  if (r0 > 0.0) {
    r.r0 = r0;
    r.gamma0 = std::exp2(r0 / B) - 1.0;
  } else {
    r.gamma0 = gamma0;
    r.r0 = B * std::log2(1.0 + gamma0);
  }
  const double noise = n0 * B;
  r.kappa_u = a_hat / env_u.eta / (r_si_w + noise);
  r.kappa_d = a_hat / env_d.eta / noise;
  r.gamma_prime_u = r.p_u > 0 ? r.gamma0 / (r.kappa_u * r.p_u) : 0.0;
  r.gamma_prime_d = r.p_d > 0 ? r.gamma0 / (r.kappa_d * r.p_d) : 0.0;
  r.I_u = r.p_u * r.kappa_u * env_u.Omega;
  r.I_d = r.p_d * r.kappa_d * env_d.Omega;
  r.V = a_hat * a_hat * p_u_w / (env_u.eta * env_d.eta * noise);
  return r;
}

ModeContext make_mode_context(const ScenarioGeometry& geom,
                              const LinkEnvironment& env_u,
                              const LinkEnvironment& env_d,
                              const RadioConfig& radio, int n_elements,
                              CascadeModel model) {
  ModeContext ctx;
  ctx.B = radio.B;
  const double th_u = elevation_angle(geom.h, geom.zhat_u);
  const double th_d = elevation_angle(geom.h, geom.zhat_d);
  ctx.alpha_u = path_loss_exponent_exact(th_u, env_u);
  ctx.alpha_d = path_loss_exponent_exact(th_d, env_d);
  ctx.d_u = geom.d_u();
  ctx.d_d = geom.d_d();
  const double pl_u = std::pow(ctx.d_u, -ctx.alpha_u);
  const double pl_d = std::pow(ctx.d_d, -ctx.alpha_d);

  ctx.up.c = radio.p_u * radio.kappa_u * pl_u;
  ctx.up.fading = RicianFading::create(env_u.K, env_u.Omega);
  ctx.down.c = radio.p_d * radio.kappa_d * pl_d;
  ctx.down.fading = RicianFading::create(env_d.K, env_d.Omega);

  ctx.irs.W = radio.V * pl_u * pl_d;
  ctx.irs.n_elements = n_elements;
  ctx.irs.model = model;
  const MomentConvention conv = model == CascadeModel::Printed
                                    ? MomentConvention::Printed
                                    : MomentConvention::Matched;
  const ProductMoments m =
      double_rician_moments(ctx.up.fading, ctx.down.fading, conv);
  if (model == CascadeModel::Printed) {
    ctx.irs.clt = clt_params(n_elements, m);
  } else {
    // Physical N-element cascade: mu_Z = N*mean, matching the oracle.
    ctx.irs.clt = clt_params(n_elements - 1, m);
    ctx.irs.clt.lambda_prime = m.mean * m.mean / (2.0 * m.variance);
  }
  return ctx;
}

namespace {

double link_outage(const LinkBudget& link, double gamma0) {
  if (link.c <= 0.0) return 1.0;
  return rician_power_cdf(gamma0 / link.c, link.fading);
}

}  // namespace

double outage_uav(const ModeContext& ctx, double gamma0) {
  if (gamma0 < 0.0) throw SchemaError("outage_uav: gamma0 must be >= 0");
  if (gamma0 == 0.0) return 0.0;
  const double fu = link_outage(ctx.up, gamma0);
  const double fd = link_outage(ctx.down, gamma0);
  return 1.0 - (1.0 - fu) * (1.0 - fd);
}

double outage_irs(const IrsBudget& irs, double gamma0,
                  IrsOutageVariant variant) {
  if (gamma0 < 0.0) throw SchemaError("outage_irs: gamma0 must be >= 0");
  if (gamma0 == 0.0) return 0.0;
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  if (variant == IrsOutageVariant::Printed) {
    // Eq. (18) literally: argument sqrt(t*Gamma0), t = 1/W.
    const double s = std::sqrt(gamma0 / irs.W);
    const double rl = std::sqrt(irs.clt.lambda);
    return 0.5 * (std::erf((s - rl) * inv_sqrt2) +
                  std::erf((s + rl) * inv_sqrt2));
  }
  // P(|Z| <= sqrt(Gamma0/W)) with Z ~ N(mu_Z, sigma_Z^2).
  const double s = std::sqrt(gamma0 / irs.W) / std::sqrt(irs.clt.sigma_z2);
  const double rl = std::sqrt(2.0 * irs.clt.lambda);  // mu_Z/sigma_Z
  double o = 0.5 * (std::erf((s - rl) * inv_sqrt2) +
                    std::erf((s + rl) * inv_sqrt2));
  if (o < 0.0) o = 0.0;
  if (o > 1.0) o = 1.0;
  return o;
}

double outage_integrated(double o_uav, double o_irs) {
  if (o_uav < 0 || o_uav > 1 || o_irs < 0 || o_irs > 1)
    throw SchemaError("outage_integrated: inputs must be probabilities");
  return o_uav * o_irs;
}

double ergodic_capacity_exact(const std::function<double(double)>& outage_fn,
                              double B, double abs_tol) {
  if (!(B > 0)) throw SchemaError("ergodic_capacity_exact: B must be > 0");
  if (abs_tol <= 0.0) abs_tol = B * 1e-6;
  // C = B * int_0^inf (1 - O(2^w - 1)) dw  (w = log2(1+Gamma0)).
  const auto integrand = [&](double w) {
    const double o = outage_fn(std::exp2(w) - 1.0);
    return 1.0 - o;
  };
  const double val = quadrature::integrate_to_infinity(
      integrand, 8.0, abs_tol / B * 0.25, abs_tol / B * 0.25);
  return B * val;
}

double capacity_bound_uav(const ModeContext& ctx) {
  const double arg = std::min(ctx.up.c * ctx.up.fading.Omega,
                              ctx.down.c * ctx.down.fading.Omega);
  return ctx.B * std::log2(1.0 + arg);
}

namespace {

double irs_bound_arg(const IrsBudget& irs) {
  if (irs.model == CascadeModel::Printed)
    return irs.W * (irs.clt.nu + irs.clt.lambda);
  return irs.W * (irs.clt.mu_z * irs.clt.mu_z + irs.clt.sigma_z2);
}

}  // namespace

double capacity_bound_irs(const IrsBudget& irs, double B) {
  return B * std::log2(1.0 + irs_bound_arg(irs));
}

double capacity_bound_integrated(const ModeContext& ctx) {
  const double uav_arg = std::min(ctx.up.c * ctx.up.fading.Omega,
                                  ctx.down.c * ctx.down.fading.Omega);
  const double arg = std::max(irs_bound_arg(ctx.irs), uav_arg);
  return ctx.B * std::log2(1.0 + arg);
}

double energy_efficiency(double capacity_bps, double power_w) {
  if (!(power_w > 0.0)) throw SchemaError("energy_efficiency: power must be > 0");
  return capacity_bps / power_w;
}

}  // namespace aeris
