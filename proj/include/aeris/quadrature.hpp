#pragma once

#include <cmath>
#include <functional>

#include "aeris/errors.hpp"

namespace aeris::quadrature {

// Adaptive Simpson with absolute tolerance. Throws NumericalError when the
// recursion depth is exhausted before the local error bound is met.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth = 60);

// Integral of f over [0, inf) for integrands that decay at least
// exponentially, via repeated doubling of the truncation point until the
// last panel contributes less than tail_tol.
double integrate_to_infinity(const std::function<double(double)>& f,
                             double initial_upper, double abs_tol,
                             double tail_tol);

}  // namespace aeris::quadrature
