// Reference scalar kernel: same math as cascade_sum_fast, compiled with the
// project's default (strict) floating-point flags.
#include "aeris/mc_kernel.hpp"

#include <cmath>

namespace aeris::mc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double cascade_sum_ref(const double* u, int n, double mu_u, double s_u,
                       double mu_d, double s_d) {
  double z = 0.0;
  for (int k = 0; k < n; ++k) {
    const double ru = -2.0 * std::log(u[4 * k]);
    const double cu = std::cos(kTwoPi * u[4 * k + 1]);
    const double rd = -2.0 * std::log(u[4 * k + 2]);
    const double cd = std::cos(kTwoPi * u[4 * k + 3]);
    double pu = mu_u * mu_u + 2.0 * mu_u * s_u * std::sqrt(ru) * cu +
                s_u * s_u * ru;
    double pd = mu_d * mu_d + 2.0 * mu_d * s_d * std::sqrt(rd) * cd +
                s_d * s_d * rd;
    if (pu < 0.0) pu = 0.0;
    if (pd < 0.0) pd = 0.0;
    z += std::sqrt(pu * pd);
  }
  return z;
}

}  // namespace aeris::mc
