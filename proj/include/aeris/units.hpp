#pragma once

#include <cmath>

#include "aeris/errors.hpp"

// Single conversion point for dB/dBm/linear and angle units. All internal
// math is linear; anything entering from a scenario file passes through here.
namespace aeris::units {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kStandardGravity = 9.80665;  // m/s^2

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watt(double dbm) { return db_to_linear(dbm - 30.0); }
inline double watt_to_dbm(double w) { return linear_to_db(w) + 30.0; }

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

enum class AngleUnit { Rad, Deg };

// Converts an angle expressed in radians into the unit the S-curve
// constants (e, g) were fitted in.
inline double angle_from_rad(double theta_rad, AngleUnit unit) {
  return unit == AngleUnit::Deg ? rad_to_deg(theta_rad) : theta_rad;
}

// Multiplier turning a per-native-unit slope (g) into a per-radian slope.
inline double per_rad_scale(AngleUnit unit) {
  return unit == AngleUnit::Deg ? 180.0 / kPi : 1.0;
}

// Mapping used when a scenario specifies the link budget as Eb/N0 (dB)
// instead of the raw system gain:  A_hat = 10^(ebn0/10) * N0 * B / p_u.
// With this choice p_u * A_hat / (N0 B) equals the quoted Eb/N0 ratio.
inline double system_gain_from_ebn0(double ebn0_db, double n0_w_per_hz,
                                    double bandwidth_hz, double p_u_watt) {
  if (p_u_watt <= 0.0) throw InfeasibleError("Eb/N0 mapping requires p_u > 0");
  return db_to_linear(ebn0_db) * n0_w_per_hz * bandwidth_hz / p_u_watt;
}

// Residual self-interference is configured in dB relative to the in-band
// noise power N0*B.
inline double rsi_watt_from_db(double rsi_db, double n0_w_per_hz,
                               double bandwidth_hz) {
  return db_to_linear(rsi_db) * n0_w_per_hz * bandwidth_hz;
}

}  // namespace aeris::units
