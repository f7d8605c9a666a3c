#include "aeris/quadrature.hpp"

#include <cmath>

namespace aeris::quadrature {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tol,
               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double err = left + right - whole;
  if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
  if (depth <= 0)
    throw NumericalError("adaptive Simpson: max depth exhausted");
  return recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson(fa, fm, fb, b - a);
  return recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double integrate_to_infinity(const std::function<double(double)>& f,
                             double initial_upper, double abs_tol,
                             double tail_tol) {
  double upper = initial_upper;
  double total = adaptive_simpson(f, 0.0, upper, abs_tol);
  for (int i = 0; i < 48; ++i) {
    const double panel = adaptive_simpson(f, upper, 2.0 * upper, abs_tol);
    total += panel;
    upper *= 2.0;
    if (std::abs(panel) < tail_tol) return total;
  }
  throw NumericalError("semi-infinite integral: tail did not decay");
}

}  // namespace aeris::quadrature
