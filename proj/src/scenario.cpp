#include "aeris/scenario.hpp"

#include <fstream>
#include <set>
#include <vector>

#include <json.hpp>

#include "aeris/errors.hpp"
#include "aeris/units.hpp"

namespace aeris {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw SchemaError(where + ": unknown key '" + it.key() + "'");
  }
  for (const auto& k : required) {
    if (!obj.count(k))
      throw SchemaError(where + ": missing key '" + k + "'");
  }
}

double num(const json& obj, const std::string& where, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number())
    throw SchemaError(where + "." + key + ": expected a number");
  return v.get<double>();
}

double num_or(const json& obj, const std::string& where, const std::string& key,
              double fallback) {
  if (!obj.count(key)) return fallback;
  return num(obj, where, key);
}

std::pair<double, double> xy(const json& obj, const std::string& where,
                             const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number())
    throw SchemaError(where + "." + key + ": expected [x, y]");
  return {v[0].get<double>(), v[1].get<double>()};
}

LinkEnvironment parse_env(const json& e, const std::string& where,
                          units::AngleUnit unit) {
  require_keys(e, where,
               {"e", "g_per_unit", "q", "v", "eta_linear", "k_factor_db",
                "omega_linear"},
               {"e", "g_per_unit", "q", "v", "eta_linear", "k_factor_db",
                "omega_linear"});
  return LinkEnvironment::create(
      num(e, where, "e"), num(e, where, "g_per_unit"), num(e, where, "q"),
      num(e, where, "v"), num(e, where, "eta_linear"),
      units::db_to_linear(num(e, where, "k_factor_db")),
      num(e, where, "omega_linear"), unit);
}

}  // namespace

RadioConfig Scenario::radio() const {
  const double noise = noise_density * bandwidth_hz;
  double a_hat;
  if (has_ebn0) {
    a_hat = units::system_gain_from_ebn0(ebn0_db, noise_density, bandwidth_hz,
                                         p_u_w);
  } else {
    a_hat = units::db_to_linear(system_gain_db);
  }
  const double rsi_w =
      units::rsi_watt_from_db(rsi_db, noise_density, bandwidth_hz);
  (void)noise;
  const double gamma0 = has_rate ? 0.0 : units::db_to_linear(gamma0_db);
  const double r0 = has_rate ? target_rate_bps : 0.0;
  return RadioConfig::create(bandwidth_hz, p_u_w, p_d_w, noise_density, a_hat,
                             rsi_w, gamma0, r0, env_u, env_d);
}

ModeContext Scenario::context(CascadeModel model) const {
  return make_mode_context(geom, env_u, env_d, radio(), n_elements, model);
}

PowerModel Scenario::power_with_n() const {
  PowerModel pm = power;
  pm.n_elements = n_elements;
  return pm;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("scenario: cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("scenario: JSON parse error: ") + e.what());
  }

  require_keys(doc, "scenario",
               {"schema_version", "geometry", "environment", "radio", "irs",
                "power", "sim", "sweep"},
               {"schema_version", "geometry", "environment", "radio", "irs",
                "power", "sim"});
  Scenario s;
  if (!doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != 1)
    throw SchemaError("scenario: unsupported schema_version");

  const json& g = doc["geometry"];
  require_keys(g, "geometry",
               {"source_xy_m", "dest_xy_m", "uav_xy_m", "height_m",
                "height_min_m", "height_max_m"},
               {"source_xy_m", "dest_xy_m", "uav_xy_m", "height_m",
                "height_min_m", "height_max_m"});
  const auto [sx, sy] = xy(g, "geometry", "source_xy_m");
  const auto [dx, dy] = xy(g, "geometry", "dest_xy_m");
  const auto [ux, uy] = xy(g, "geometry", "uav_xy_m");
  s.geom = ScenarioGeometry::create(sx, sy, dx, dy, ux, uy,
                                    num(g, "geometry", "height_m"),
                                    num(g, "geometry", "height_min_m"),
                                    num(g, "geometry", "height_max_m"));

  const json& env = doc["environment"];
  require_keys(env, "environment", {"angle_unit", "uplink", "downlink"},
               {"angle_unit", "uplink", "downlink"});
  const std::string unit_s = env.at("angle_unit").get<std::string>();
  units::AngleUnit unit;
  if (unit_s == "deg")
    unit = units::AngleUnit::Deg;
  else if (unit_s == "rad")
    unit = units::AngleUnit::Rad;
  else
    throw SchemaError("environment.angle_unit: expected 'deg' or 'rad'");
  s.env_u = parse_env(env["uplink"], "environment.uplink", unit);
  s.env_d = parse_env(env["downlink"], "environment.downlink", unit);

  const json& r = doc["radio"];
  require_keys(r, "radio",
               {"bandwidth_hz", "p_u_dbm", "p_d_dbm",
                "noise_density_w_per_hz", "ebn0_db", "system_gain_db",
                "rsi_over_noise_db", "snr_threshold_db", "target_rate_bps"},
               {"bandwidth_hz", "p_u_dbm", "p_d_dbm",
                "noise_density_w_per_hz", "rsi_over_noise_db"});
  s.bandwidth_hz = num(r, "radio", "bandwidth_hz");
  s.p_u_w = units::dbm_to_watt(num(r, "radio", "p_u_dbm"));
  s.p_d_w = units::dbm_to_watt(num(r, "radio", "p_d_dbm"));
  s.noise_density = num(r, "radio", "noise_density_w_per_hz");
  s.rsi_db = num(r, "radio", "rsi_over_noise_db");
  const bool has_ebn0 = r.count("ebn0_db") > 0;
  const bool has_gain = r.count("system_gain_db") > 0;
  if (has_ebn0 == has_gain)
    throw SchemaError("radio: exactly one of ebn0_db / system_gain_db");
  s.has_ebn0 = has_ebn0;
  if (has_ebn0)
    s.ebn0_db = num(r, "radio", "ebn0_db");
  else
    s.system_gain_db = num(r, "radio", "system_gain_db");
  const bool has_thr = r.count("snr_threshold_db") > 0;
  const bool has_rate = r.count("target_rate_bps") > 0;
  if (has_thr == has_rate)
    throw SchemaError("radio: exactly one of snr_threshold_db / target_rate_bps");
  s.has_rate = has_rate;
  if (has_rate)
    s.target_rate_bps = num(r, "radio", "target_rate_bps");
  else
    s.gamma0_db = num(r, "radio", "snr_threshold_db");

  const json& irs = doc["irs"];
  require_keys(irs, "irs",
               {"n_elements", "n_min", "n_max", "element_power_w",
                "element_spacing_m"},
               {"n_elements", "n_min", "n_max", "element_power_w",
                "element_spacing_m"});
  s.n_elements = static_cast<int>(num(irs, "irs", "n_elements"));
  s.n_min = static_cast<int>(num(irs, "irs", "n_min"));
  s.n_max = static_cast<int>(num(irs, "irs", "n_max"));
  s.element_power_w = num(irs, "irs", "element_power_w");
  s.element_spacing_m = num(irs, "irs", "element_spacing_m");
  if (s.n_elements < 1 || s.n_min < 1 || s.n_max < s.n_min)
    throw SchemaError("irs: invalid element counts");
  if (s.element_power_w < 0 || s.element_spacing_m <= 0)
    throw SchemaError("irs: invalid element parameters");

  const json& pw = doc["power"];
  const std::set<std::string> pw_keys = {
      "air_density_kg_per_m3", "rotor_disc_area_m2",
      "blade_angular_velocity_rad_per_s", "rotor_radius_m", "rotor_solidity",
      "profile_drag_coeff", "induced_correction", "mass_kg",
      "uav_circuit_power_w", "bs_circuit_power_w", "battery_j"};
  require_keys(pw, "power", pw_keys, pw_keys);
  PowerModel pm;
  pm.rho = num(pw, "power", "air_density_kg_per_m3");
  pm.disc_area = num(pw, "power", "rotor_disc_area_m2");
  pm.xi = num(pw, "power", "blade_angular_velocity_rad_per_s");
  pm.rotor_r = num(pw, "power", "rotor_radius_m");
  pm.solidity = num(pw, "power", "rotor_solidity");
  pm.delta = num(pw, "power", "profile_drag_coeff");
  pm.kappa_rot = num(pw, "power", "induced_correction");
  pm.mass = num(pw, "power", "mass_kg");
  pm.p_c = num(pw, "power", "uav_circuit_power_w");
  pm.p_bs = num(pw, "power", "bs_circuit_power_w");
  pm.battery_j = num(pw, "power", "battery_j");
  pm.p_r_element = s.element_power_w;
  pm.n_elements = s.n_elements;
  s.power = PowerModel::validated(pm);

  const json& sim = doc["sim"];
  require_keys(sim, "sim", {"trials", "seed"}, {"trials", "seed"});
  s.trials = static_cast<long>(num(sim, "sim", "trials"));
  s.seed = static_cast<std::uint64_t>(num(sim, "sim", "seed"));
  if (s.trials < 1) throw SchemaError("sim.trials must be >= 1");

  if (doc.count("sweep")) {
    const json& sw = doc["sweep"];
    require_keys(sw, "sweep", {"variable", "from", "to", "step"},
                 {"variable", "from", "to", "step"});
    s.sweep.present = true;
    s.sweep.variable = sw.at("variable").get<std::string>();
    s.sweep.from = num(sw, "sweep", "from");
    s.sweep.to = num(sw, "sweep", "to");
    s.sweep.step = num(sw, "sweep", "step");
    if (!(s.sweep.step > 0) || s.sweep.to < s.sweep.from)
      throw SchemaError("sweep: require step > 0 and to >= from");
    // Validate the variable name eagerly.
    Scenario probe = s;
    probe.sweep.present = false;
    apply_sweep_value(probe, s.sweep.variable, s.sweep.from);
  }

  // Build the derived configs once to surface validation errors at load.
  (void)s.radio();
  return s;
}

void apply_sweep_value(Scenario& s, const std::string& variable,
                       double value) {
  if (variable == "n_elements") {
    const int n = static_cast<int>(value);
    if (n < 1) throw InfeasibleError("sweep n_elements: must be >= 1");
    s.n_elements = n;
    s.power.n_elements = n;
  } else if (variable == "height_m") {
    if (value < s.geom.h_min || value > s.geom.h_max)
      throw InfeasibleError("sweep height_m: outside [h_min, h_max]");
    s.geom.h = value;
  } else if (variable == "uav_x_m") {
    s.geom = ScenarioGeometry::create(s.geom.source_x, s.geom.source_y,
                                      s.geom.dest_x, s.geom.dest_y, value,
                                      s.geom.uav_y, s.geom.h, s.geom.h_min,
                                      s.geom.h_max);
  } else if (variable == "gamma0_db") {
    if (s.has_rate)
      throw SchemaError("sweep gamma0_db: scenario is rate-specified");
    s.gamma0_db = value;
  } else if (variable == "element_power_w") {
    if (value < 0) throw InfeasibleError("sweep element_power_w: negative");
    s.element_power_w = value;
    s.power.p_r_element = value;
  } else {
    throw SchemaError("sweep: unknown variable '" + variable + "'");
  }
}

}  // namespace aeris
