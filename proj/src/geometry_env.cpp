#include "aeris/geometry_env.hpp"

#include <cmath>
#include <stdexcept>

#include "aeris/errors.hpp"

namespace aeris {

ScenarioGeometry ScenarioGeometry::create(double sx, double sy, double dx,
                                          double dy, double ux, double uy,
                                          double h, double h_min,
                                          double h_max) {
  if (!(h_min > 0.0)) throw SchemaError("geometry: h_min must be > 0");
  if (!(h_min <= h && h <= h_max))
    throw SchemaError("geometry: require h_min <= h <= h_max");
  ScenarioGeometry g;
  g.source_x = sx;
  g.source_y = sy;
  g.dest_x = dx;
  g.dest_y = dy;
  g.uav_x = ux;
  g.uav_y = uy;
  g.h = h;
  g.h_min = h_min;
  g.h_max = h_max;
  g.zhat_u = std::hypot(ux - sx, uy - sy);
  g.zhat_d = std::hypot(ux - dx, uy - dy);
  return g;
}

LinkEnvironment LinkEnvironment::create(double e, double g, double q, double v,
                                        double eta, double K, double Omega,
                                        units::AngleUnit unit) {
  if (!(eta > 0.0)) throw SchemaError("environment: eta must be > 0");
  if (!(Omega > 0.0)) throw SchemaError("environment: Omega must be > 0");
  if (!(K >= 0.0)) throw SchemaError("environment: K must be >= 0");
  if (!(g > 0.0)) throw SchemaError("environment: g must be > 0");
  LinkEnvironment env;
  env.e = e;
  env.g = g;
  env.q = q;
  env.v = v;
  env.eta = eta;
  env.K = K;
  env.Omega = Omega;
  env.angle_unit = unit;
  env.varsigma = e * std::exp(g * e);
  env.g_rad = g * units::per_rad_scale(unit);
  const double s = env.varsigma;
  const double gr = env.g_rad;
  env.A = q + v * (1.0 + s);
  env.B = 3.0 * s * v * gr;
  env.C = 4.5 * v * s * gr * gr;
  env.Bp = 3.0 * s * gr;
  env.Cp = 4.5 * s * gr * gr;
  env.b = (K + 1.0) / Omega;
  return env;
}

double elevation_angle(double h, double horizontal_offset) {
  if (h < 0.0 || horizontal_offset < 0.0)
    throw SchemaError("elevation_angle: negative argument");
  if (h == 0.0 && horizontal_offset == 0.0)
    throw SchemaError("elevation_angle: undefined at coincident points");
  if (horizontal_offset == 0.0) return 0.5 * units::kPi;
  return std::atan(h / horizontal_offset);
}

double los_probability(double theta_rad, const LinkEnvironment& env) {
  const double theta = units::angle_from_rad(theta_rad, env.angle_unit);
  return 1.0 / (1.0 + env.e * std::exp(-env.g * (theta - env.e)));
}

double path_loss_exponent_exact(double theta_rad, const LinkEnvironment& env) {
  return los_probability(theta_rad, env) * env.q + env.v;
}

double path_loss_exponent_approx(double h, double zhat,
                                 const LinkEnvironment& env) {
  if (!(zhat > 0.0))
    throw SchemaError("path_loss_exponent_approx: need zhat > 0");
  const double s = zhat + 2.0 * std::hypot(zhat, h);
  const double num = env.A * s * s - env.B * h * s + env.C * h * h;
  const double den =
      (1.0 + env.varsigma) * s * s - env.Bp * h * s + env.Cp * h * h;
  if (!(den > 0.0))
    throw InfeasibleError(
        "path_loss_exponent_approx: non-positive denominator (outside "
        "validity region)");
  return num / den;
}

}  // namespace aeris
