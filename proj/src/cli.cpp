#include "aeris/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "aeris/errors.hpp"
#include "aeris/mode_select.hpp"
#include "aeris/montecarlo.hpp"
#include "aeris/optimizer.hpp"
#include "aeris/units.hpp"

namespace aeris::cli {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

using Row = std::vector<std::pair<std::string, std::string>>;

void write_outputs(const std::string& out_dir, const std::string& command,
                   const std::vector<Row>& rows) {
  std::filesystem::create_directories(out_dir);
  const std::string base = out_dir + "/" + command;
  std::ofstream csv(base + ".csv");
  std::ofstream js(base + ".json");
  if (!csv || !js)
    throw NumericalError("cli: cannot open output files under " + out_dir);
  if (!rows.empty()) {
    for (std::size_t i = 0; i < rows.front().size(); ++i)
      csv << (i ? "," : "") << rows.front()[i].first;
    csv << "\n";
    for (const Row& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i)
        csv << (i ? "," : "") << r[i].second;
      csv << "\n";
    }
  }
  js << "[\n";
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    js << "  {";
    for (std::size_t i = 0; i < rows[ri].size(); ++i) {
      js << (i ? ", " : "") << '"' << rows[ri][i].first << "\": \""
         << rows[ri][i].second << '"';
    }
    js << "}" << (ri + 1 < rows.size() ? "," : "") << "\n";
  }
  js << "]\n";
}

struct SweepPoint {
  std::string variable;
  double value;
};

std::vector<SweepPoint> expand_sweep(const Scenario& s) {
  std::vector<SweepPoint> pts;
  if (!s.sweep.present) {
    pts.push_back({"none", 0.0});
    return pts;
  }
  for (double v = s.sweep.from; v <= s.sweep.to + 0.5 * s.sweep.step;
       v += s.sweep.step)
    pts.push_back({s.sweep.variable, std::min(v, s.sweep.to)});
  return pts;
}

Scenario at_point(const Scenario& s, const SweepPoint& pt) {
  Scenario c = s;
  if (pt.variable != "none") apply_sweep_value(c, pt.variable, pt.value);
  return c;
}

void push_common(Row& row, const SweepPoint& pt) {
  row.emplace_back("sweep_variable", pt.variable);
  row.emplace_back("sweep_value", fmt(pt.value));
}

void push_tail(Row& row, const std::string& provenance) {
  row.emplace_back("provenance", provenance);
  row.emplace_back("version", kVersion);
}

int cmd_metrics(const Scenario& s, const std::string& out_dir) {
  std::vector<Row> rows;
  for (const SweepPoint& pt : expand_sweep(s)) {
    const Scenario c = at_point(s, pt);
    const RadioConfig radio = c.radio();
    const ModeContext ctx = c.context();
    const PowerModel pm = c.power_with_n();
    const double g0 = radio.gamma0;

    const double ou = outage_uav(ctx, g0);
    const double oi = outage_irs(ctx.irs, g0);
    const double on = outage_integrated(ou, oi);
    const double cu = ergodic_capacity_exact(
        [&](double g) { return outage_uav(ctx, g); }, radio.B);
    const double ci = ergodic_capacity_exact(
        [&](double g) { return outage_irs(ctx.irs, g); }, radio.B);
    const double cn = ergodic_capacity_exact(
        [&](double g) {
          return outage_integrated(outage_uav(ctx, g),
                                   outage_irs(ctx.irs, g));
        },
        radio.B);
    const double p_uav = mode_power(RelayMode::UAV, radio.p_u, radio.p_d, pm);
    const double p_irs = mode_power(RelayMode::IRS, radio.p_u, radio.p_d, pm);
    const double p_int = mode_power(RelayMode::INT, radio.p_u, radio.p_d, pm);

    Row row;
    push_common(row, pt);
    row.emplace_back("outage_uav", fmt(ou));
    row.emplace_back("outage_irs", fmt(oi));
    row.emplace_back("outage_int", fmt(on));
    row.emplace_back("capacity_uav_bps", fmt(cu));
    row.emplace_back("capacity_irs_bps", fmt(ci));
    row.emplace_back("capacity_int_bps", fmt(cn));
    row.emplace_back("capacity_bound_uav_bps", fmt(capacity_bound_uav(ctx)));
    row.emplace_back("capacity_bound_irs_bps",
                     fmt(capacity_bound_irs(ctx.irs, radio.B)));
    row.emplace_back("capacity_bound_int_bps",
                     fmt(capacity_bound_integrated(ctx)));
    row.emplace_back("power_uav_w", fmt(p_uav));
    row.emplace_back("power_irs_w", fmt(p_irs));
    row.emplace_back("power_int_w", fmt(p_int));
    row.emplace_back("ee_uav", fmt(energy_efficiency(cu, p_uav)));
    row.emplace_back("ee_irs", fmt(energy_efficiency(ci, p_irs)));
    row.emplace_back("ee_int", fmt(energy_efficiency(cn, p_int)));
    row.emplace_back("hover_endurance_s", fmt(hover_endurance(pm)));
    push_tail(row, "closed_form");
    rows.push_back(std::move(row));
  }
  write_outputs(out_dir, "metrics", rows);
  return kOk;
}

int cmd_simulate(const Scenario& s, const std::string& out_dir) {
  std::vector<Row> rows;
  for (const SweepPoint& pt : expand_sweep(s)) {
    const Scenario c = at_point(s, pt);
    const RadioConfig radio = c.radio();
    const ModeContext ctx = c.context();
    const PowerModel pm = c.power_with_n();
    const double p_uav = mode_power(RelayMode::UAV, radio.p_u, radio.p_d, pm);
    const double p_irs = mode_power(RelayMode::IRS, radio.p_u, radio.p_d, pm);
    SimPlan plan;
    plan.trials = c.trials;
    plan.seed = c.seed;
    const SimResult r =
        simulate_all_modes(ctx, radio.gamma0, p_irs / p_uav, plan);

    Row row;
    push_common(row, pt);
    const auto mode_cols = [&](const char* name, const ModeEstimates& m) {
      row.emplace_back(std::string("outage_") + name, fmt(m.outage.value));
      row.emplace_back(std::string("outage_se_") + name, fmt(m.outage.se));
      row.emplace_back(std::string("capacity_") + name + "_bps",
                       fmt(m.capacity.value));
      row.emplace_back(std::string("capacity_se_") + name + "_bps",
                       fmt(m.capacity.se));
      row.emplace_back(std::string("mean_snr_") + name, fmt(m.mean_snr.value));
      row.emplace_back(std::string("mean_snr_se_") + name, fmt(m.mean_snr.se));
    };
    mode_cols("uav", r.uav);
    mode_cols("irs", r.irs);
    mode_cols("int", r.integrated);
    row.emplace_back("irs_select_freq", fmt(r.irs_select.value));
    row.emplace_back("irs_select_se", fmt(r.irs_select.se));
    row.emplace_back("trials", fmt(static_cast<double>(r.trials)));
    push_tail(row, "simulated");
    rows.push_back(std::move(row));
  }
  write_outputs(out_dir, "simulate", rows);
  return kOk;
}

IrsElementProblem element_problem(const Scenario& c) {
  const ModeContext ctx = c.context(CascadeModel::Printed);
  const PowerModel pm = c.power_with_n();
  IrsElementProblem p;
  p.W = ctx.irs.W;
  p.lambda_prime = ctx.irs.clt.lambda_prime;
  p.nu = ctx.irs.clt.nu;
  p.B = c.radio().B;
  p.p_u = c.p_u_w;
  p.P_r = c.element_power_w;
  p.C = pm.p_c + hover_power(pm) + 2.0 * pm.p_bs;
  p.n_min = c.n_min;
  p.n_max = c.n_max;
  return p;
}

int cmd_optimize(const Scenario& s, const std::string& out_dir) {
  std::vector<Row> rows;
  for (const SweepPoint& pt : expand_sweep(s)) {
    const Scenario c = at_point(s, pt);
    const RadioConfig radio = c.radio();
    const PowerModel pm = c.power_with_n();
    const double p_uav = mode_power(RelayMode::UAV, radio.p_u, radio.p_d, pm);
    const double p_irs = mode_power(RelayMode::IRS, radio.p_u, radio.p_d, pm);

    const IrsElementProblem ep = element_problem(c);
    const OptReport en = optimize_irs_elements(ep);
    long n_exh = ep.n_min;
    double best = irs_ee_printed(ep, ep.n_min);
    for (int n = ep.n_min + 1; n <= ep.n_max; ++n) {
      const double v = irs_ee_printed(ep, n);
      if (v > best) {
        best = v;
        n_exh = n;
      }
    }

    const ModeContext ctx = c.context();
    IrsHeightProblem ip;
    ip.zhat_u = c.geom.zhat_u;
    ip.zhat_d = c.geom.zhat_d;
    ip.env_u = c.env_u;
    ip.env_d = c.env_d;
    ip.h_min = c.geom.h_min;
    ip.h_max = c.geom.h_max;
    ip.B = radio.B;
    ip.v_gain = radio.V;
    ip.mean_x = ctx.irs.clt.mu_z * ctx.irs.clt.mu_z + ctx.irs.clt.sigma_z2;
    ip.p_total = p_irs;
    const OptReport rh = optimize_irs_height(ip);

    UavHeightProblem upb;
    upb.zhat_u = c.geom.zhat_u;
    upb.zhat_d = c.geom.zhat_d;
    upb.env_u = c.env_u;
    upb.env_d = c.env_d;
    upb.h_min = c.geom.h_min;
    upb.h_max = c.geom.h_max;
    upb.I_u = radio.I_u;
    upb.I_d = radio.I_d;
    upb.B = radio.B;
    upb.p_total = p_uav;
    // The max-min transform requires -O >= 0 over the height range; sweep
    // points outside that regime report NaN instead of aborting the sweep.
    OptReport ru;
    bool uav_feasible = true;
    try {
      ru = optimize_uav_height(upb);
    } catch (const InfeasibleError&) {
      uav_feasible = false;
      ru.x_star = ru.exh_approx_x = ru.exh_exact_x = ru.ee_at_opt =
          std::numeric_limits<double>::quiet_NaN();
    }

    const ConcavityVerdict g_iu =
        check_concavity_irs(c.geom.zhat_u, c.env_u, c.geom.h_min, c.geom.h_max);
    const ConcavityVerdict g_id =
        check_concavity_irs(c.geom.zhat_d, c.env_d, c.geom.h_min, c.geom.h_max);
    const ConcavityVerdict g_uu = check_concavity_uav(
        c.geom.zhat_u, c.env_u, radio.I_u, c.geom.h_min, c.geom.h_max);
    const ConcavityVerdict g_ud = check_concavity_uav(
        c.geom.zhat_d, c.env_d, radio.I_d, c.geom.h_min, c.geom.h_max);

    Row row;
    push_common(row, pt);
    row.emplace_back("n_star", fmt(en.x_star));
    row.emplace_back("n_exhaustive", fmt(static_cast<double>(n_exh)));
    row.emplace_back("ee_at_n_star", fmt(en.ee_at_opt));
    row.emplace_back("alg1_iterations", fmt(en.iterations));
    row.emplace_back("alg1_monotone", en.monotone ? "1" : "0");
    row.emplace_back("h_star_irs", fmt(rh.x_star));
    row.emplace_back("h_irs_exh_approx", fmt(rh.exh_approx_x));
    row.emplace_back("h_irs_exh_exact", fmt(rh.exh_exact_x));
    row.emplace_back("ee_irs_at_h", fmt(rh.ee_at_opt));
    row.emplace_back("alg2_iterations", fmt(rh.iterations));
    row.emplace_back("alg2_fallback", rh.used_fallback ? "1" : "0");
    row.emplace_back("h_star_uav", fmt(ru.x_star));
    row.emplace_back("h_uav_exh_approx", fmt(ru.exh_approx_x));
    row.emplace_back("h_uav_exh_exact", fmt(ru.exh_exact_x));
    row.emplace_back("ee_uav_at_h", fmt(ru.ee_at_opt));
    row.emplace_back("alg3_iterations", fmt(ru.iterations));
    row.emplace_back("alg3_fallback", ru.used_fallback ? "1" : "0");
    row.emplace_back("alg3_feasible", uav_feasible ? "1" : "0");
    row.emplace_back("prop4_ok_u", g_iu.satisfied ? "1" : "0");
    row.emplace_back("prop4_ok_d", g_id.satisfied ? "1" : "0");
    row.emplace_back("prop5_ok_u", g_uu.satisfied ? "1" : "0");
    row.emplace_back("prop5_ok_d", g_ud.satisfied ? "1" : "0");
    push_tail(row, "closed_form");
    rows.push_back(std::move(row));
  }
  write_outputs(out_dir, "optimize", rows);
  return kOk;
}

int cmd_select(const Scenario& s, const std::string& out_dir) {
  std::vector<Row> rows;
  for (const SweepPoint& pt : expand_sweep(s)) {
    const Scenario c = at_point(s, pt);
    const RadioConfig radio = c.radio();
    const PowerModel pm = c.power_with_n();
    const double p_uav = mode_power(RelayMode::UAV, radio.p_u, radio.p_d, pm);
    const double p_irs = mode_power(RelayMode::IRS, radio.p_u, radio.p_d, pm);
    const ModeContext ctx = c.context();
    const double p_sel = selection_probability_irs(ctx, p_uav, p_irs);
    const ModeContext ctx_printed = c.context(CascadeModel::Printed);
    const ElementThreshold th =
        element_threshold(ctx_printed, radio.p_u, radio.p_d, pm);
    // Height-optimized EE comparison is only defined where Algorithm 3's
    // sign-flip premise holds; elsewhere fall back to the Eq.-(54) rule.
    SelectionReport rep;
    bool heights_feasible = true;
    try {
      rep = select_mode_by_optimal_heights(c.geom, c.env_u, c.env_d, radio,
                                           pm, c.n_elements);
    } catch (const InfeasibleError&) {
      heights_feasible = false;
      rep.chosen = p_sel > 0.5 ? "IRS" : "UAV";
      rep.ee_irs = rep.ee_uav = rep.h_irs = rep.h_uav =
          std::numeric_limits<double>::quiet_NaN();
    }
    const bool remark_irs =
        c.n_elements <= radio.p_d / std::max(1e-300, c.element_power_w);

    Row row;
    push_common(row, pt);
    row.emplace_back("p_irs", fmt(p_sel));
    row.emplace_back("p_uav", fmt(1.0 - p_sel));
    row.emplace_back("n_th", fmt(th.n_th));
    row.emplace_back("n_th_denom_sign", fmt(th.denom_sign));
    row.emplace_back("chosen_mode", rep.chosen);
    row.emplace_back("ee_irs_opt_h", fmt(rep.ee_irs));
    row.emplace_back("ee_uav_opt_h", fmt(rep.ee_uav));
    row.emplace_back("h_star_irs", fmt(rep.h_irs));
    row.emplace_back("h_star_uav", fmt(rep.h_uav));
    row.emplace_back("power_rule_mode", remark_irs ? "IRS" : "UAV");
    row.emplace_back("heights_feasible", heights_feasible ? "1" : "0");
    push_tail(row, "closed_form");
    rows.push_back(std::move(row));
  }
  write_outputs(out_dir, "select", rows);
  return kOk;
}

int cmd_validate(const Scenario& s, const std::string& out_dir) {
  std::vector<Row> rows;
  bool breach = false;
  for (const SweepPoint& pt : expand_sweep(s)) {
    const Scenario c = at_point(s, pt);
    const RadioConfig radio = c.radio();
    const ModeContext ctx = c.context();
    const PowerModel pm = c.power_with_n();
    const double p_uav = mode_power(RelayMode::UAV, radio.p_u, radio.p_d, pm);
    const double p_irs = mode_power(RelayMode::IRS, radio.p_u, radio.p_d, pm);
    SimPlan plan;
    plan.trials = c.trials;
    plan.seed = c.seed;
    const SimResult sim =
        simulate_all_modes(ctx, radio.gamma0, p_irs / p_uav, plan);

    const double ou = outage_uav(ctx, radio.gamma0);
    const double oi = outage_irs(ctx.irs, radio.gamma0);
    const double on = outage_integrated(ou, oi);
    const double cu = ergodic_capacity_exact(
        [&](double g) { return outage_uav(ctx, g); }, radio.B);

    // Binomial comparison: the standard error of an outage estimate at the
    // analytic probability is the right scale even when the empirical count
    // is 0 or trials (where the sample SE collapses to zero).
    const double n_tr = static_cast<double>(sim.trials);
    const auto outage_ok = [&](double closed, const Estimate& est) {
      const double se_cl = std::sqrt(closed * (1.0 - closed) / n_tr);
      const double se = std::max({est.se, se_cl, 1e-12});
      return std::abs(closed - est.value) <= 3.0 * se;
    };
    const bool ok_ou = outage_ok(ou, sim.uav.outage);
    const bool check_irs = c.n_elements >= 20;
    const bool ok_oi = !check_irs || outage_ok(oi, sim.irs.outage);
    const bool ok_on = !check_irs || outage_ok(on, sim.integrated.outage);
    const bool ok_cap =
        std::abs(cu - sim.uav.capacity.value) <=
        0.01 * std::max(sim.uav.capacity.value, 1e-9);
    const auto jensen_ok = [&](const ModeEstimates& m) {
      const double lhs = radio.B * std::log2(1.0 + m.mean_snr.value);
      return lhs >= m.capacity.value * (1.0 - 1e-9);
    };
    const bool ok_j = jensen_ok(sim.uav) && jensen_ok(sim.irs) &&
                      jensen_ok(sim.integrated);
    const bool point_ok = ok_ou && ok_oi && ok_on && ok_cap && ok_j;
    breach = breach || !point_ok;

    Row row;
    push_common(row, pt);
    row.emplace_back("outage_uav_closed", fmt(ou));
    row.emplace_back("outage_uav_sim", fmt(sim.uav.outage.value));
    row.emplace_back("outage_uav_se", fmt(sim.uav.outage.se));
    row.emplace_back("outage_irs_closed", fmt(oi));
    row.emplace_back("outage_irs_sim", fmt(sim.irs.outage.value));
    row.emplace_back("outage_irs_se", fmt(sim.irs.outage.se));
    row.emplace_back("outage_int_closed", fmt(on));
    row.emplace_back("outage_int_sim", fmt(sim.integrated.outage.value));
    row.emplace_back("outage_int_se", fmt(sim.integrated.outage.se));
    row.emplace_back("capacity_uav_closed_bps", fmt(cu));
    row.emplace_back("capacity_uav_sim_bps", fmt(sim.uav.capacity.value));
    row.emplace_back("ok_outage_uav", ok_ou ? "1" : "0");
    row.emplace_back("ok_outage_irs", ok_oi ? "1" : "0");
    row.emplace_back("ok_outage_int", ok_on ? "1" : "0");
    row.emplace_back("ok_capacity_uav", ok_cap ? "1" : "0");
    row.emplace_back("ok_jensen", ok_j ? "1" : "0");
    push_tail(row, "simulated");
    rows.push_back(std::move(row));
  }
  write_outputs(out_dir, "validate", rows);
  return breach ? kToleranceBreach : kOk;
}

}  // namespace

int run_command(const std::string& command, Scenario scenario,
                const std::string& out_dir) {
  try {
    if (command == "metrics") return cmd_metrics(scenario, out_dir);
    if (command == "simulate") return cmd_simulate(scenario, out_dir);
    if (command == "optimize") return cmd_optimize(scenario, out_dir);
    if (command == "select") return cmd_select(scenario, out_dir);
    if (command == "validate") return cmd_validate(scenario, out_dir);
    std::cerr << "unknown command: " << command << "\n";
    return kSchemaError;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ToleranceError& e) {
    std::cerr << "tolerance breach: " << e.what() << "\n";
    return kToleranceBreach;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Analytical model + optimizer for an integrated UAV-IRS relay"};
  app.set_version_flag("--version", kVersion);
  std::string command, scenario_path, out_dir = "out", grid;
  long trials = -1;
  long long seed = -1;
  app.add_option("command", command,
                 "metrics | simulate | optimize | select | validate")
      ->required();
  app.add_option("--scenario", scenario_path, "scenario file")->required();
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--trials", trials, "override sim.trials");
  app.add_option("--seed", seed, "override sim.seed");
  app.add_option("--grid", grid, "override sweep: var=lo:hi:step");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kSchemaError;
  }

  Scenario s;
  try {
    s = load_scenario(scenario_path);
    if (trials > 0) s.trials = trials;
    if (seed >= 0) s.seed = static_cast<std::uint64_t>(seed);
    if (!grid.empty()) {
      const auto eq = grid.find('=');
      if (eq == std::string::npos)
        throw SchemaError("--grid: expected var=lo:hi:step");
      SweepSpec sw;
      sw.present = true;
      sw.variable = grid.substr(0, eq);
      const std::string spec = grid.substr(eq + 1);
      double lo, hi, step;
      if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3)
        throw SchemaError("--grid: expected var=lo:hi:step");
      sw.from = lo;
      sw.to = hi;
      sw.step = step;
      if (!(step > 0) || hi < lo) throw SchemaError("--grid: bad range");
      s.sweep = sw;
      Scenario probe = s;
      probe.sweep.present = false;
      apply_sweep_value(probe, sw.variable, sw.from);
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchemaError;
  }
  return run_command(command, std::move(s), out_dir);
}

}  // namespace aeris::cli
