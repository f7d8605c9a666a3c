#pragma once

#include <cmath>

#include "aeris/units.hpp"

namespace aeris {

// Ground-node / UAV layout. Immutable after construction; all derived
// quantities cached.
struct ScenarioGeometry {
  double source_x = 0, source_y = 0;
  double dest_x = 0, dest_y = 0;
  double uav_x = 0, uav_y = 0;
  double h = 0, h_min = 0, h_max = 0;
  double zhat_u = 0, zhat_d = 0;  // horizontal offsets UAV->S, UAV->D

  static ScenarioGeometry create(double sx, double sy, double dx, double dy,
                                 double ux, double uy, double h, double h_min,
                                 double h_max);

  double d_u() const { return std::hypot(zhat_u, h); }
  double d_d() const { return std::hypot(zhat_d, h); }
  double d_u_at(double height) const { return std::hypot(zhat_u, height); }
  double d_d_at(double height) const { return std::hypot(zhat_d, height); }
};

// Per-link air-to-ground environment constants plus every derived
// coefficient the optimizers need. The S-curve constants (e, g) are fitted
// in the declared angle unit; the rational-approximation coefficients use
// the per-radian slope because the arctan surrogate works in radians.
struct LinkEnvironment {
  double e = 0, g = 0;      // LoS S-curve constants (native angle unit)
  double q = 0, v = 0;      // path-loss-exponent constants
  double eta = 0;           // excess aerial path loss (linear)
  double K = 0, Omega = 0;  // Rician factor / mean fading power (linear)
  units::AngleUnit angle_unit = units::AngleUnit::Deg;

  double varsigma = 0;            // e*exp(g*e)
  double g_rad = 0;               // S-curve slope per radian
  double A = 0, B = 0, C = 0;     // Eq.-(40) numerator coefficients
  double Bp = 0, Cp = 0;          // Eq.-(40) denominator coefficients
  double b = 0;                   // (K+1)/Omega

  static LinkEnvironment create(double e, double g, double q, double v,
                                double eta, double K, double Omega,
                                units::AngleUnit unit);
};

// Eq. (1). Returns radians; pi/2 when the UAV is directly overhead.
double elevation_angle(double h, double horizontal_offset);

// Eq. (2). theta_rad in radians; converted internally to the unit (e, g)
// were fitted in.
double los_probability(double theta_rad, const LinkEnvironment& env);

// Eq. (3): alpha(theta) = p_L(theta) * q + v.
double path_loss_exponent_exact(double theta_rad, const LinkEnvironment& env);

// Eq. (40) rational approximation of alpha as a function of altitude.
// Throws InfeasibleError when the denominator is not positive.
double path_loss_exponent_approx(double h, double zhat,
                                 const LinkEnvironment& env);

}  // namespace aeris
