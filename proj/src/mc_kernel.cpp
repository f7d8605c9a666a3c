// Hot sampling kernel. Compiled separately with -O3 -march=native
// -ffast-math (see CMakeLists) so the log/cos calls vectorize; everything
// here is NaN-free and tolerant of relaxed FP semantics.
#include "aeris/mc_kernel.hpp"

#include <cmath>

namespace aeris::mc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double cascade_sum_fast(const double* u, int n, double mu_u, double s_u,
                        double mu_d, double s_d) {
  double z = 0.0;
#pragma omp simd reduction(+ : z)
  for (int k = 0; k < n; ++k) {
    const double ru = -2.0 * std::log(u[4 * k]);
    const double cu = std::cos(kTwoPi * u[4 * k + 1]);
    const double rd = -2.0 * std::log(u[4 * k + 2]);
    const double cd = std::cos(kTwoPi * u[4 * k + 3]);
    double pu = mu_u * mu_u + 2.0 * mu_u * s_u * std::sqrt(ru) * cu +
                s_u * s_u * ru;
    double pd = mu_d * mu_d + 2.0 * mu_d * s_d * std::sqrt(rd) * cd +
                s_d * s_d * rd;
    pu = pu > 0.0 ? pu : 0.0;  // guard ulp-negative under fast-math
    pd = pd > 0.0 ? pd : 0.0;
    z += std::sqrt(pu * pd);
  }
  return z;
}

}  // namespace aeris::mc
