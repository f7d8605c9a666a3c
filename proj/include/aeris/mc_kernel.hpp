#pragma once

namespace aeris::mc {

// Cascade partial sum Z = sum_{k=0..n-1} |h_u,k| |h_d,k| consuming 4n
// uniforms from u (u1_u, u2_u, u1_d, u2_d per element). The fast variant is
// compiled with vectorization-friendly flags in its own translation unit;
// the reference variant is plain scalar code. Both are deterministic for a
// given uniform buffer; they may differ in the last few ulps.
double cascade_sum_fast(const double* u, int n, double mu_u, double s_u,
                        double mu_d, double s_d);

double cascade_sum_ref(const double* u, int n, double mu_u, double s_u,
                       double mu_d, double s_d);

}  // namespace aeris::mc
