#pragma once

namespace aeris {

enum class RelayMode { UAV, IRS, INT };

// Hover/hardware power model (section II.E). All SI units.
struct PowerModel {
  double rho = 1.225;       // air density kg/m^3
  double disc_area = 0.503; // rotor disc area m^2
  double xi = 300.0;        // blade angular velocity rad/s
  double rotor_r = 0.4;     // rotor radius m
  double solidity = 0.05;
  double delta = 0.012;     // profile drag coefficient
  double kappa_rot = 0.1;   // induced-power correction
  double mass = 2.0;        // kg
  double p_c = 5.0;         // UAV circuit power W
  double p_bs = 5.0;        // per-ground-BS circuit power W
  double battery_j = 5.0e5; // E_B
  double p_r_element = 1.08; // per-element phase-resolution power P_r(b), W
  int n_elements = 0;

  static PowerModel validated(const PowerModel& m);
};

// p_h = delta/8 * rho * s * A * xi^3 r^3 + (1+kappa) sqrt((mg)^3/(2 rho A)).
double hover_power(const PowerModel& model);

// UAV: p_u+p_d+C; IRS: p_u+N*P_r+C; INT: p_u+p_d+N*P_r+C, with
// C = p_c + p_h + 2 p_bs shared by all modes.
double mode_power(RelayMode mode, double p_u_w, double p_d_w,
                  const PowerModel& model);

// T_hov = E_B / (p_c + N*P_r + p_h); transmit power excluded per the
// p_uav definition in II.E.1.
double hover_endurance(const PowerModel& model);

}  // namespace aeris
