#include "aeris/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aeris/errors.hpp"
#include "aeris/golden.hpp"

namespace aeris {

namespace {

// Dense scan helper returning {argopt, value}; maximize=false minimizes.
std::pair<double, double> dense_scan(const std::function<double(double)>& f,
                                     double lo, double hi, double step,
                                     bool maximize) {
  double best_x = lo;
  double best_f = f(lo);
  for (double x = lo + step; x <= hi + 0.5 * step; x += step) {
    const double xc = std::min(x, hi);
    const double fx = f(xc);
    if (maximize ? fx > best_f : fx < best_f) {
      best_f = fx;
      best_x = xc;
    }
  }
  return {best_x, best_f};
}

}  // namespace

OptReport qt_single_ratio_max(const std::function<double(double)>& O,
                              const std::function<double(double)>& R,
                              double lo, double hi, const QtOptions& opt) {
  if (!(lo < hi)) throw SchemaError("qt_single_ratio_max: empty interval");
  OptReport rep;

  // Guard grid: R > 0, O >= 0.
  for (int i = 0; i <= opt.guard_grid; ++i) {
    const double x = lo + (hi - lo) * i / opt.guard_grid;
    if (!(R(x) > 0.0))
      throw InfeasibleError("qt_single_ratio_max: R <= 0 on guard grid");
    if (O(x) < 0.0)
      throw InfeasibleError("qt_single_ratio_max: O < 0 on guard grid");
  }

  const double x_tol = opt.inner_tol_frac * (hi - lo);
  double x = 0.5 * (lo + hi);
  double ratio = O(x) / R(x);
  double y = std::sqrt(O(x)) / R(x);
  rep.y_trajectory.push_back(y);
  double prev_y = std::numeric_limits<double>::infinity();
  int j = 1;
  while (std::abs(y - prev_y) >= opt.eps && j < opt.j_max) {
    prev_y = y;
    const auto surrogate_neg = [&](double t) {
      return -(2.0 * y * std::sqrt(O(t)) - y * y * R(t));
    };
    auto [xn, fn] = optim::grid_then_golden_min(surrogate_neg, lo, hi,
                                               opt.guard_grid, x_tol);
    (void)fn;
    const double new_ratio = O(xn) / R(xn);
    if (new_ratio + 1e-12 * std::abs(ratio) < ratio) rep.monotone = false;
    x = xn;
    ratio = new_ratio;
    y = std::sqrt(O(x)) / R(x);
    rep.y_trajectory.push_back(y);
    ++j;
  }
  rep.iterations = j;
  rep.x_star = x;
  rep.objective = ratio;

  if (!rep.monotone) {
    // Fall back to a dense search on the true ratio.
    const auto neg_ratio = [&](double t) { return -O(t) / R(t); };
    auto [xb, fb] = optim::grid_then_golden_min(neg_ratio, lo, hi, 256, x_tol);
    if (-fb > ratio) {
      rep.x_star = xb;
      rep.objective = -fb;
      rep.used_fallback = true;
    }
  }
  return rep;
}

double irs_capacity_printed(const IrsElementProblem& p, double n_real) {
  const double lambda = (n_real + 1.0) * p.lambda_prime;
  return p.B * std::log2(1.0 + p.W * (p.nu + lambda));
}

double irs_ee_printed(const IrsElementProblem& p, double n_real) {
  return irs_capacity_printed(p, n_real) /
         (p.p_u + n_real * p.P_r + p.C);
}

OptReport optimize_irs_elements(const IrsElementProblem& p,
                                const QtOptions& opt) {
  if (!(p.lambda_prime > 0))
    throw InfeasibleError("optimize_irs_elements: lambda' must be > 0");
  if (p.n_min >= p.n_max)
    throw SchemaError("optimize_irs_elements: empty element range");
  const double lam_lo = (p.n_min + 1.0) * p.lambda_prime;
  const double lam_hi = (p.n_max + 1.0) * p.lambda_prime;
  const auto O = [&](double lam) {
    return p.B * std::log2(1.0 + p.W * (p.nu + lam));
  };
  const auto R = [&](double lam) {
    return p.p_u + (lam - p.lambda_prime) / p.lambda_prime * p.P_r + p.C;
  };
  OptReport rep = qt_single_ratio_max(O, R, lam_lo, lam_hi, opt);
  const double n_star_real = (rep.x_star - p.lambda_prime) / p.lambda_prime;

  // Integer recovery: better of floor/ceil, clamped to the range.
  const auto clamp_n = [&](long n) {
    return std::min<long>(p.n_max, std::max<long>(p.n_min, n));
  };
  const long nf = clamp_n(static_cast<long>(std::floor(n_star_real)));
  const long nc = clamp_n(static_cast<long>(std::ceil(n_star_real)));
  const double ef = irs_ee_printed(p, static_cast<double>(nf));
  const double ec = irs_ee_printed(p, static_cast<double>(nc));
  const long n_star = ef >= ec ? nf : nc;
  rep.x_star = static_cast<double>(n_star);
  rep.objective = std::max(ef, ec);
  rep.ee_at_opt = rep.objective;
  return rep;
}

int min_power_elements(const IrsElementProblem& p, double r0,
                       MinPowerForm form) {
  if (!(r0 >= 0)) throw SchemaError("min_power_elements: r0 must be >= 0");
  const double gamma_req = std::exp2(r0 / p.B) - 1.0;  // required mean SNR
  double interior;
  if (form == MinPowerForm::Printed) {
    interior = (std::sqrt(gamma_req / p.W) - p.nu - p.lambda_prime) /
               p.lambda_prime;
  } else {
    interior = (gamma_req / p.W - p.nu - p.lambda_prime) / p.lambda_prime;
  }
  const double n_real = std::ceil(interior);
  if (n_real <= p.n_min) return p.n_min;
  if (n_real >= p.n_max) {
    // Clamping to N_max must still satisfy the rate constraint.
    if (form == MinPowerForm::ConstraintConsistent &&
        irs_capacity_printed(p, p.n_max) < r0 * (1.0 - 1e-12))
      throw InfeasibleError("min_power_elements: rate unreachable at N_max");
    return p.n_max;
  }
  return static_cast<int>(n_real);
}

double min_power_uplink(const IrsElementProblem& p, double r0, int n) {
  if (!(p.p_u > 0)) throw SchemaError("min_power_uplink: need p_u > 0");
  const double gamma_req = std::exp2(r0 / p.B) - 1.0;
  const double w_per_watt = p.W / p.p_u;  // W scales linearly in p_u
  return gamma_req / (w_per_watt * (p.nu + (n + 1.0) * p.lambda_prime));
}

double qt_R_poly(double h, double zhat, const LinkEnvironment& env) {
  const double s = zhat + 2.0 * std::hypot(zhat, h);
  return (1.0 + env.varsigma) * s * s - env.Bp * h * s + env.Cp * h * h;
}

double qt_O_irs(double h, double zhat, const LinkEnvironment& env) {
  const double s = zhat + 2.0 * std::hypot(zhat, h);
  const double poly = env.A * s * s - env.B * h * s + env.C * h * h;
  return 0.5 * std::log(h * h + zhat * zhat) * poly;
}

double qt_O_uav(double h, double zhat, const LinkEnvironment& env, double I) {
  const double ld = std::log(h * h + zhat * zhat);
  const double li = std::log(I);
  const double g1 = 2.0 * li * (1.0 + env.varsigma) - env.A * ld;
  const double g2 = 2.0 * li * env.Bp - env.B * ld;
  const double g3 = 2.0 * li * env.Cp - env.C * ld;
  const double s = zhat + 2.0 * std::hypot(zhat, h);
  return g1 * s * s - g2 * h * s + g3 * h * h;
}

namespace {

// Exact-alpha single-link exponent at height h.
double alpha_exact_at(double h, double zhat, const LinkEnvironment& env) {
  return path_loss_exponent_exact(elevation_angle(h, zhat), env);
}

}  // namespace

OptReport optimize_irs_height(const IrsHeightProblem& p, const QtOptions& opt) {
  if (!(p.h_min > 0 && p.h_min < p.h_max))
    throw SchemaError("optimize_irs_height: bad height interval");
  const auto O_u = [&](double h) { return qt_O_irs(h, p.zhat_u, p.env_u); };
  const auto O_d = [&](double h) { return qt_O_irs(h, p.zhat_d, p.env_d); };
  const auto R_u = [&](double h) { return qt_R_poly(h, p.zhat_u, p.env_u); };
  const auto R_d = [&](double h) { return qt_R_poly(h, p.zhat_d, p.env_d); };
  // Approximate objective (to minimize): alpha_u ln d_u + alpha_d ln d_d.
  const auto approx_obj = [&](double h) {
    return O_u(h) / R_u(h) + O_d(h) / R_d(h);
  };

  OptReport rep;
  for (int i = 0; i <= opt.guard_grid; ++i) {
    const double h = p.h_min + (p.h_max - p.h_min) * i / opt.guard_grid;
    if (!(R_u(h) > 0) || !(R_d(h) > 0))
      throw InfeasibleError("optimize_irs_height: R <= 0 on guard grid");
    if (O_u(h) < 0 || O_d(h) < 0) {
      rep.guard_ok = false;
      break;
    }
  }
  if (!rep.guard_ok)
    throw InfeasibleError(
        "optimize_irs_height: O < 0 on guard grid (need h^2+zhat^2 > 1)");

  const double x_tol = opt.inner_tol_frac * (p.h_max - p.h_min);
  double h = std::sqrt(p.h_min * p.h_max);
  double obj = approx_obj(h);
  double y_u = std::sqrt(O_u(h)) / R_u(h);
  double y_d = std::sqrt(O_d(h)) / R_d(h);
  rep.y_trajectory.push_back(y_u);
  rep.y_trajectory.push_back(y_d);
  double prev_u = std::numeric_limits<double>::infinity();
  double prev_d = prev_u;
  int j = 1;
  while ((std::abs(y_u - prev_u) >= opt.eps ||
          std::abs(y_d - prev_d) >= opt.eps) &&
         j < opt.j_max) {
    prev_u = y_u;
    prev_d = y_d;
    const auto surrogate = [&](double t) {
      return 2.0 * y_u * std::sqrt(O_u(t)) - y_u * y_u * R_u(t) +
             2.0 * y_d * std::sqrt(O_d(t)) - y_d * y_d * R_d(t);
    };
    auto [hn, fn] =
        optim::grid_then_golden_min(surrogate, p.h_min, p.h_max,
                                    opt.guard_grid, x_tol);
    (void)fn;
    const double new_obj = approx_obj(hn);
    if (new_obj > obj + 1e-12 * std::abs(obj)) rep.monotone = false;
    h = hn;
    obj = new_obj;
    y_u = std::sqrt(O_u(h)) / R_u(h);
    y_d = std::sqrt(O_d(h)) / R_d(h);
    rep.y_trajectory.push_back(y_u);
    rep.y_trajectory.push_back(y_d);
    ++j;
  }
  rep.iterations = j;
  rep.x_star = h;
  rep.objective = obj;

  if (!rep.monotone) {
    auto [hb, fb] =
        optim::grid_then_golden_min(approx_obj, p.h_min, p.h_max, 256, x_tol);
    if (fb < obj) {
      rep.x_star = hb;
      rep.objective = fb;
      rep.used_fallback = true;
    }
  }

  // Exhaustive references on a 1 m grid.
  rep.exhaustive_ran = true;
  std::tie(rep.exh_approx_x, rep.exh_approx_obj) =
      dense_scan(approx_obj, p.h_min, p.h_max, 1.0, false);
  const auto exact_obj = [&](double t) {
    return alpha_exact_at(t, p.zhat_u, p.env_u) * std::log(p.zhat_u * p.zhat_u + t * t) * 0.5 +
           alpha_exact_at(t, p.zhat_d, p.env_d) * std::log(p.zhat_d * p.zhat_d + t * t) * 0.5;
  };
  std::tie(rep.exh_exact_x, rep.exh_exact_obj) =
      dense_scan(exact_obj, p.h_min, p.h_max, 1.0, false);
  rep.gap_to_exhaustive = rep.objective - rep.exh_approx_obj;

  if (p.p_total > 0 && p.B > 0) {
    const double au = alpha_exact_at(rep.x_star, p.zhat_u, p.env_u);
    const double ad = alpha_exact_at(rep.x_star, p.zhat_d, p.env_d);
    const double du = std::hypot(p.zhat_u, rep.x_star);
    const double dd = std::hypot(p.zhat_d, rep.x_star);
    const double arg =
        p.v_gain * std::pow(du, -au) * std::pow(dd, -ad) * p.mean_x;
    rep.ee_at_opt = p.B * std::log2(1.0 + arg) / p.p_total;
  }
  return rep;
}

OptReport optimize_uav_height(const UavHeightProblem& p, const QtOptions& opt) {
  if (!(p.h_min > 0 && p.h_min < p.h_max))
    throw SchemaError("optimize_uav_height: bad height interval");
  if (!(p.I_u > 0 && p.I_d > 0))
    throw SchemaError("optimize_uav_height: need positive link gains");
  const auto O_u = [&](double h) {
    return qt_O_uav(h, p.zhat_u, p.env_u, p.I_u);
  };
  const auto O_d = [&](double h) {
    return qt_O_uav(h, p.zhat_d, p.env_d, p.I_d);
  };
  const auto R_u = [&](double h) { return qt_R_poly(h, p.zhat_u, p.env_u); };
  const auto R_d = [&](double h) { return qt_R_poly(h, p.zhat_d, p.env_d); };
  // True (approximate-alpha) objective, to maximize: min_i O_i/R_i.
  const auto true_obj = [&](double h) {
    return std::min(O_u(h) / R_u(h), O_d(h) / R_d(h));
  };

  OptReport rep;
  for (int i = 0; i <= opt.guard_grid; ++i) {
    const double h = p.h_min + (p.h_max - p.h_min) * i / opt.guard_grid;
    if (!(R_u(h) > 0) || !(R_d(h) > 0))
      throw InfeasibleError("optimize_uav_height: R <= 0 on guard grid");
    if (-O_u(h) < 0 || -O_d(h) < 0)
      throw InfeasibleError(
          "optimize_uav_height: sign-flip premise broken (-O < 0)");
  }

  const double x_tol = opt.inner_tol_frac * (p.h_max - p.h_min);
  double h = std::sqrt(p.h_min * p.h_max);
  double obj = true_obj(h);
  double y_u = std::sqrt(-O_u(h)) / R_u(h);
  double y_d = std::sqrt(-O_d(h)) / R_d(h);
  rep.y_trajectory.push_back(y_u);
  rep.y_trajectory.push_back(y_d);
  double prev_u = std::numeric_limits<double>::infinity();
  double prev_d = prev_u;
  int j = 1;
  while ((std::abs(y_u - prev_u) >= opt.eps ||
          std::abs(y_d - prev_d) >= opt.eps) &&
         j < opt.j_max) {
    prev_u = y_u;
    prev_d = y_d;
    // Inner step: minimize z(h) = max_i (y_i^2 R_i - 2 y_i sqrt(-O_i)).
    const auto z_of_h = [&](double t) {
      const double zu = y_u * y_u * R_u(t) - 2.0 * y_u * std::sqrt(-O_u(t));
      const double zd = y_d * y_d * R_d(t) - 2.0 * y_d * std::sqrt(-O_d(t));
      return std::max(zu, zd);
    };
    auto [hn, fn] =
        optim::grid_then_golden_min(z_of_h, p.h_min, p.h_max, opt.guard_grid,
                                    x_tol);
    (void)fn;
    const double new_obj = true_obj(hn);
    if (new_obj + 1e-12 * std::abs(obj) < obj) rep.monotone = false;
    h = hn;
    obj = new_obj;
    y_u = std::sqrt(-O_u(h)) / R_u(h);
    y_d = std::sqrt(-O_d(h)) / R_d(h);
    rep.y_trajectory.push_back(y_u);
    rep.y_trajectory.push_back(y_d);
    ++j;
  }
  rep.iterations = j;
  rep.x_star = h;
  rep.objective = obj;

  if (!rep.monotone) {
    const auto neg = [&](double t) { return -true_obj(t); };
    auto [hb, fb] =
        optim::grid_then_golden_min(neg, p.h_min, p.h_max, 256, x_tol);
    if (-fb > obj) {
      rep.x_star = hb;
      rep.objective = -fb;
      rep.used_fallback = true;
    }
  }

  rep.exhaustive_ran = true;
  std::tie(rep.exh_approx_x, rep.exh_approx_obj) =
      dense_scan(true_obj, p.h_min, p.h_max, 1.0, true);
  const auto exact_obj = [&](double t) {
    const double gu = std::log(p.I_u) -
                      alpha_exact_at(t, p.zhat_u, p.env_u) *
                          std::log(t * t + p.zhat_u * p.zhat_u);
    const double gd = std::log(p.I_d) -
                      alpha_exact_at(t, p.zhat_d, p.env_d) *
                          std::log(t * t + p.zhat_d * p.zhat_d);
    return std::min(gu, gd);
  };
  std::tie(rep.exh_exact_x, rep.exh_exact_obj) =
      dense_scan(exact_obj, p.h_min, p.h_max, 1.0, true);
  rep.gap_to_exhaustive = rep.exh_approx_obj - rep.objective;

  if (p.p_total > 0 && p.B > 0) {
    const double au = alpha_exact_at(rep.x_star, p.zhat_u, p.env_u);
    const double ad = alpha_exact_at(rep.x_star, p.zhat_d, p.env_d);
    const double du = std::hypot(p.zhat_u, rep.x_star);
    const double dd = std::hypot(p.zhat_d, rep.x_star);
    const double arg =
        std::min(p.I_u * std::pow(du, -au), p.I_d * std::pow(dd, -ad));
    rep.ee_at_opt = p.B * std::log2(1.0 + arg) / p.p_total;
  }
  return rep;
}

ConcavityVerdict check_concavity_irs(double zhat, const LinkEnvironment& env,
                                     double h_min, double h_max, int grid) {
  ConcavityVerdict v;
  v.points_checked = grid + 1;
  const double r1 =
      std::pow((78.0 * env.A + 14.0 * env.C) / (11.0 * env.B), 0.25);
  for (int i = 0; i <= grid; ++i) {
    const double h = h_min + (h_max - h_min) * i / grid;
    bool ok = zhat > 10.0;
    if (ok) {
      if (zhat >= h) {
        ok = zhat >= std::pow(h, 1.25) * r1;
      } else {
        // Appendix-A branch of the h > zhat case.
        const double r2 = std::pow(
            (78.0 * env.A * zhat + env.B + 14.0 * env.C * zhat) /
                (12.0 * env.B),
            0.25);
        ok = h >= zhat * r2;
      }
    }
    if (!ok) v.failing_points.push_back(h);
  }
  v.satisfied = v.failing_points.empty();
  return v;
}

ConcavityVerdict check_concavity_uav(double zhat, const LinkEnvironment& env,
                                     double I, double h_min, double h_max,
                                     int grid) {
  ConcavityVerdict v;
  v.points_checked = grid + 1;
  const double ratio = (18.0 * env.A - 5.0 * env.B + 4.0 * env.C) /
                       (36.0 * (1.0 + env.varsigma) - 10.0 * env.Bp +
                        8.0 * env.Cp);
  const double li = std::log(I);
  for (int i = 0; i <= grid; ++i) {
    const double h = h_min + (h_max - h_min) * i / grid;
    if (!(li <= ratio * std::log(h * h + zhat * zhat)))
      v.failing_points.push_back(h);
  }
  v.satisfied = v.failing_points.empty();
  return v;
}

}  // namespace aeris
