#pragma once

#include <functional>

#include "aeris/channel_stats.hpp"
#include "aeris/geometry_env.hpp"

namespace aeris {

// Radio-layer configuration in linear units plus derived composites.
struct RadioConfig {
  double B = 0;        // Hz
  double p_u = 0;      // W
  double p_d = 0;      // W
  double n0 = 0;       // W/Hz
  double a_hat = 0;    // linear system gain
  double r_si = 0;     // W (residual self-interference)
  double gamma0 = 0;   // linear SNR threshold
  double r0 = 0;       // bps target rate (0 when threshold-specified)

  double kappa_u = 0;  // a_hat/eta_u / (r_si + n0 B)
  double kappa_d = 0;  // a_hat/eta_d / (n0 B)
  double gamma_prime_u = 0, gamma_prime_d = 0;  // gamma0/(kappa_i p_i)
  double I_u = 0, I_d = 0;  // p_i kappa_i Omega_i
  double V = 0;             // a_hat^2 p_u /(eta_u eta_d n0 B)

  static RadioConfig create(double B, double p_u_w, double p_d_w, double n0,
                            double a_hat, double r_si_w, double gamma0,
                            double r0, const LinkEnvironment& env_u,
                            const LinkEnvironment& env_d);
};

// Two IRS-outage parameterizations (channel_stats open question): the
// Eq.-(18) erf pair exactly as printed (argument sqrt(t*Gamma0) with
// t = d^a d^a / V), and the standardized variant P(Z^2 <= Gamma0/W) with
// Z ~ N(mu_Z, sigma_Z^2), which is the one the Monte-Carlo oracle matches.
enum class IrsOutageVariant { Standardized, Printed };

// Cascade scaling convention. Matched: mu_Z = N * mean (agrees with a
// physical N-element cascade, used wherever the oracle arbitrates).
// Printed: mu_Z = (N+1) * mean with the proof's moment expressions (used by
// the closed-form optimizer algebra, Eqs. 28/32-36/55).
enum class CascadeModel { Matched, Printed };

// Per-link direct budget: Gamma_i = c * X_i with X_i ~ Rician power.
struct LinkBudget {
  double c = 0;
  RicianFading fading;
};

// IRS branch budget: Gamma_IRS = W * Z^2.
struct IrsBudget {
  double W = 0;
  CltParams clt;
  int n_elements = 0;
  CascadeModel model = CascadeModel::Matched;
};

struct ModeContext {
  LinkBudget up, down;
  IrsBudget irs;
  double B = 0;
  double alpha_u = 0, alpha_d = 0;
  double d_u = 0, d_d = 0;
};

// Assembles all per-mode SNR composites at the geometry's current height,
// with the exact Eq.-(3) path-loss exponents.
ModeContext make_mode_context(const ScenarioGeometry& geom,
                              const LinkEnvironment& env_u,
                              const LinkEnvironment& env_d,
                              const RadioConfig& radio, int n_elements,
                              CascadeModel model = CascadeModel::Matched);

// Eq. (16): 1 - (1-F_u(Gamma0/c_u))(1-F_d(Gamma0/c_d)).
double outage_uav(const ModeContext& ctx, double gamma0);

// Eq. (18) / standardized variant.
double outage_irs(const IrsBudget& irs, double gamma0,
                  IrsOutageVariant variant = IrsOutageVariant::Standardized);

// Eq. (21): product of branch outages.
double outage_integrated(double o_uav, double o_irs);

// Eq. (22) by quadrature. The substitution Gamma0 = 2^w - 1 turns the
// integral into B * int_0^inf (1 - O(2^w - 1)) dw, a bounded decaying
// integrand. abs_tol is in bps.
double ergodic_capacity_exact(const std::function<double(double)>& outage_fn,
                              double B, double abs_tol = 0.0);

// Eq. (25): B log2(1 + min(c_u Omega_u, c_d Omega_d)).
double capacity_bound_uav(const ModeContext& ctx);

// Eq. (28). Printed model: arg = W*(nu + lambda). Matched model:
// arg = W * E[Z^2] = W*(mu_Z^2 + sigma_Z^2).
double capacity_bound_irs(const IrsBudget& irs, double B);

// Eq. (31d): max of the two bound arguments under the log.
double capacity_bound_integrated(const ModeContext& ctx);

double energy_efficiency(double capacity_bps, double power_w);

}  // namespace aeris
