#pragma once

#include <functional>
#include <vector>

#include "aeris/geometry_env.hpp"

namespace aeris {

struct QtOptions {
  double eps = 1e-6;         // auxiliary-variable convergence
  int j_max = 100;
  int guard_grid = 64;       // pre-check grid density
  double inner_tol_frac = 1e-4;  // golden-section tol as fraction of width
};

struct ConcavityVerdict {
  bool satisfied = true;
  int points_checked = 0;
  std::vector<double> failing_points;
};

struct OptReport {
  double x_star = 0;
  double objective = 0;      // the solver's own (approximate) objective
  double ee_at_opt = 0;      // model EE evaluated at x_star (when available)
  int iterations = 0;
  std::vector<double> y_trajectory;  // per-iteration auxiliary values
  bool guard_ok = true;
  bool monotone = true;      // surrogate iterations improved the objective
  bool used_fallback = false;  // dense search replaced/confirmed QT result
  bool exhaustive_ran = false;
  double exh_approx_x = 0, exh_approx_obj = 0;  // same objective, dense grid
  double exh_exact_x = 0, exh_exact_obj = 0;    // exact objective, dense grid
  double gap_to_exhaustive = 0;
};

// Algorithm-1 engine: maximize O(x)/R(x) on [lo, hi] by alternating
// y = sqrt(O)/R with a golden-section surrogate maximization.
OptReport qt_single_ratio_max(const std::function<double(double)>& O,
                              const std::function<double(double)>& R,
                              double lo, double hi,
                              const QtOptions& opt = {});

// Inputs for the element-count problems (printed cascade model: the
// capacity argument is W*(nu + (N+1)*lambda')).
struct IrsElementProblem {
  double W = 0;             // V d_u^-au d_d^-ad at the operating height
  double lambda_prime = 0;
  double nu = 1;
  double B = 0;
  double p_u = 0, P_r = 0, C = 0;  // EE denominator pieces
  int n_min = 20, n_max = 500;
};

// Algorithm 1: EE maximization over lambda with integer recovery.
OptReport optimize_irs_elements(const IrsElementProblem& prob,
                                const QtOptions& opt = {});

double irs_capacity_printed(const IrsElementProblem& prob, double n_real);
double irs_ee_printed(const IrsElementProblem& prob, double n_real);

// Eq. (35)/(36). The printed Eq. (35) takes the square root of the required
// mean SNR, which contradicts the paper's own constraint C1 (and the
// bracketing property); the default inverts C1 exactly, the printed form is
// kept selectable.
enum class MinPowerForm { ConstraintConsistent, Printed };
int min_power_elements(const IrsElementProblem& prob, double r0,
                       MinPowerForm form = MinPowerForm::ConstraintConsistent);
double min_power_uplink(const IrsElementProblem& prob, double r0, int n);

// Quadratic-transform building blocks shared with the tests' finite-
// difference oracles. s(h) = zhat + 2*sqrt(zhat^2+h^2).
double qt_R_poly(double h, double zhat, const LinkEnvironment& env);
// O_i for Algorithm 2: 0.5*ln(h^2+zhat^2) * (A s^2 - B h s + C h^2).
double qt_O_irs(double h, double zhat, const LinkEnvironment& env);
// O_i for Algorithm 3 (Eq. 48), natural logs.
double qt_O_uav(double h, double zhat, const LinkEnvironment& env, double I);

struct IrsHeightProblem {
  double zhat_u = 0, zhat_d = 0;
  LinkEnvironment env_u, env_d;
  double h_min = 0, h_max = 0;
  // For the EE report (Eq. 38): C(h) = B log2(1 + v_gain d^-au d^-ad mean_x).
  double B = 0, v_gain = 0, mean_x = 0, p_total = 0;
};

// Algorithm 2: minimize sum_i O_i/R_i over h.
OptReport optimize_irs_height(const IrsHeightProblem& prob,
                              const QtOptions& opt = {});

struct UavHeightProblem {
  double zhat_u = 0, zhat_d = 0;
  LinkEnvironment env_u, env_d;
  double h_min = 0, h_max = 0;
  double I_u = 0, I_d = 0;
  double B = 0, p_total = 0;  // for the EE report (Eq. 26)
};

// Algorithm 3: max-min via the sign-flipped epigraph quadratic transform.
OptReport optimize_uav_height(const UavHeightProblem& prob,
                              const QtOptions& opt = {});

// Prop. 4 guard (Appendix-A branch for h > zhat).
ConcavityVerdict check_concavity_irs(double zhat, const LinkEnvironment& env,
                                     double h_min, double h_max,
                                     int grid = 64);

// Prop. 5 guard: ln(I) <= ratio * ln(h^2+zhat^2).
ConcavityVerdict check_concavity_uav(double zhat, const LinkEnvironment& env,
                                     double I, double h_min, double h_max,
                                     int grid = 64);

}  // namespace aeris
