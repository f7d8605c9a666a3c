#pragma once

#include <cmath>
#include <functional>
#include <utility>

namespace aeris::optim {

// Golden-section minimization on [lo, hi]; x_tol is absolute.
// Returns {argmin, min value}. Assumes unimodality; callers that cannot
// guarantee it pre-bracket on a grid.
inline std::pair<double, double> golden_section_min(
    const std::function<double(double)>& f, double lo, double hi,
    double x_tol) {
  constexpr double invphi = 0.6180339887498948482;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

// Coarse grid scan followed by golden refinement in the best bracket.
// Robust when unimodality is only approximate.
inline std::pair<double, double> grid_then_golden_min(
    const std::function<double(double)>& f, double lo, double hi, int grid_n,
    double x_tol) {
  if (grid_n < 3) grid_n = 3;
  double best_x = lo, best_f = f(lo);
  int best_i = 0;
  const double step = (hi - lo) / (grid_n - 1);
  for (int i = 1; i < grid_n; ++i) {
    const double x = lo + i * step;
    const double fx = f(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
      best_i = i;
    }
  }
  const double a = (best_i == 0) ? lo : lo + (best_i - 1) * step;
  const double b = (best_i == grid_n - 1) ? hi : lo + (best_i + 1) * step;
  auto [x, fx] = golden_section_min(f, a, b, x_tol);
  if (fx <= best_f) return {x, fx};
  return {best_x, best_f};
}

}  // namespace aeris::optim
