#include "aeris/power.hpp"

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/units.hpp"

namespace aeris {

PowerModel PowerModel::validated(const PowerModel& m) {
  if (!(m.rho > 0 && m.disc_area > 0 && m.xi > 0 && m.rotor_r > 0 &&
        m.solidity > 0 && m.mass > 0))
    throw SchemaError("PowerModel: physical parameters must be > 0");
  if (m.n_elements < 0 || m.p_r_element < 0)
    throw SchemaError("PowerModel: IRS element parameters must be >= 0");
  if (!(m.p_c >= 0 && m.p_bs >= 0 && m.battery_j > 0))
    throw SchemaError("PowerModel: circuit/battery parameters invalid");
  return m;
}

double hover_power(const PowerModel& m) {
  const double profile = m.delta / 8.0 * m.rho * m.solidity * m.disc_area *
                         m.xi * m.xi * m.xi * m.rotor_r * m.rotor_r * m.rotor_r;
  const double thrust = m.mass * units::kStandardGravity;
  const double induced = (1.0 + m.kappa_rot) *
                         std::sqrt(thrust * thrust * thrust /
                                   (2.0 * m.rho * m.disc_area));
  return profile + induced;
}

double mode_power(RelayMode mode, double p_u_w, double p_d_w,
                  const PowerModel& m) {
  const double shared = m.p_c + hover_power(m) + 2.0 * m.p_bs;
  const double p_irs_hw = m.n_elements * m.p_r_element;
  switch (mode) {
    case RelayMode::UAV:
      return p_u_w + p_d_w + shared;
    case RelayMode::IRS:
      return p_u_w + p_irs_hw + shared;
    case RelayMode::INT:
      return p_u_w + p_d_w + p_irs_hw + shared;
  }
  throw SchemaError("mode_power: unknown mode");
}

double hover_endurance(const PowerModel& m) {
  const double p_uav = m.p_c + m.n_elements * m.p_r_element + hover_power(m);
  if (!(p_uav > 0.0)) throw InfeasibleError("hover_endurance: zero power");
  return m.battery_j / p_uav;
}

}  // namespace aeris
