#pragma once

#include <string>

#include "aeris/optimizer.hpp"
#include "aeris/performance.hpp"
#include "aeris/power.hpp"

namespace aeris {

struct SelectionReport {
  double p_irs = 0;     // Eq. (54) probability
  double p_uav = 0;
  double n_th = 0;      // Eq. (55) threshold
  int denom_sign = 0;   // sign of the Eq. (55) denominator
  std::string chosen;   // "IRS" or "UAV"
  double ee_irs = 0, ee_uav = 0;
  double h_irs = 0, h_uav = 0;
};

// Eq. (54): 1 - int_0^inf F_IRS(z * P_IRS/P_UAV) f_UAV(z) dz with the
// standardized cascade CDF and the order-statistics UAV density.
double selection_probability_irs(const ModeContext& ctx, double p_uav_w,
                                 double p_irs_w);

struct ElementThreshold {
  double n_th = 0;
  int denom_sign = 0;
};

// Eq. (55) closed form under the printed cascade model. A negative
// denominator flips the decision direction; the sign is reported rather
// than resolved. Throws NumericalError on a zero denominator.
ElementThreshold element_threshold(const ModeContext& ctx, double p_u_w,
                                   double p_d_w, const PowerModel& power);

// Section V.D: run both height optimizers and pick the larger EE.
// Tie-break prefers IRS.
SelectionReport select_mode_by_optimal_heights(
    const ScenarioGeometry& geom, const LinkEnvironment& env_u,
    const LinkEnvironment& env_d, const RadioConfig& radio,
    const PowerModel& power, int n_elements, const QtOptions& opt = {});

}  // namespace aeris
