#pragma once

#include <cstdint>
#include <string>

#include "aeris/geometry_env.hpp"
#include "aeris/performance.hpp"
#include "aeris/power.hpp"

namespace aeris {

struct SweepSpec {
  bool present = false;
  std::string variable;  // n_elements | height_m | uav_x_m | gamma0_db |
                         // element_power_w
  double from = 0, to = 0, step = 0;
};

// In-memory scenario. Keeps the raw configured quantities so sweeps can
// mutate a copy and rebuild the derived configs.
struct Scenario {
  int schema_version = 1;

  ScenarioGeometry geom;
  LinkEnvironment env_u, env_d;

  double bandwidth_hz = 0;
  double p_u_w = 0, p_d_w = 0;
  double noise_density = 0;
  bool has_ebn0 = false;
  double ebn0_db = 0;        // when has_ebn0
  double system_gain_db = 0; // otherwise
  double rsi_db = 0;         // relative to N0*B
  bool has_rate = false;
  double gamma0_db = 0;
  double target_rate_bps = 0;

  int n_elements = 0, n_min = 20, n_max = 500;
  double element_power_w = 0, element_spacing_m = 0;

  PowerModel power;

  long trials = 1000000;
  std::uint64_t seed = 1;

  SweepSpec sweep;

  RadioConfig radio() const;
  ModeContext context(CascadeModel model = CascadeModel::Matched) const;
  PowerModel power_with_n() const;  // power model with n_elements applied
};

// Strict loader: unknown keys anywhere are schema errors; the exclusive
// choices (ebn0_db vs system_gain_db, snr_threshold_db vs target_rate_bps)
// are enforced. Throws SchemaError.
Scenario load_scenario(const std::string& path);

// Sets one sweep variable on a scenario copy. Throws SchemaError for
// unknown variables, InfeasibleError for out-of-range values.
void apply_sweep_value(Scenario& s, const std::string& variable, double value);

}  // namespace aeris
