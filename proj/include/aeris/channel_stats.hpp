#pragma once

#include <cmath>

#include "aeris/rng.hpp"

namespace aeris {

// Rician fading with E[|h|^2] = Omega. Amplitude = |mu + sigma_s*(n1 + i n2)|
// with per-component scatter variance sigma_s^2 = Omega/(2(K+1)).
struct RicianFading {
  double K = 0;
  double Omega = 1;

  static RicianFading create(double K, double Omega);

  double b() const { return (K + 1.0) / Omega; }
  double mu2() const { return K * Omega / (K + 1.0); }
  double mu() const { return std::sqrt(mu2()); }
  double sigma_scatter2() const { return Omega / (2.0 * (K + 1.0)); }
};

// Two conventions for the double-Rician product moments.
//  Printed: the expressions exactly as they appear in the proof of Prop. 1
//           (1F1 arguments -mu^2/(2*Omega), mean prefactor sigma*pi/2).
//  Matched: the physically normalized moments that reproduce Monte-Carlo
//           sample moments (per-link mean sqrt(pi*Omega/(4(K+1)))*1F1(-1/2;1;-K),
//           product variance Omega_u*Omega_d - mean^2).
enum class MomentConvention { Printed, Matched };

struct ProductMoments {
  double mean = 0;
  double variance = 0;
};

struct CltParams {
  double mu_z = 0;        // mean of Z
  double sigma_z2 = 0;    // variance of Z
  double lambda = 0;      // mu_z^2 / (2 sigma_z2)
  double lambda_prime = 0;
  int nu = 1;
};

// Eq.-(13) power CDF via the Poisson-mixture form
//   F(x) = 1 - sum_l PoisPMF(l;K) * PoisCDF(l; b x),
// numerically stable for large b*x. ell_max = 0 means adaptive truncation
// (tail weight < 1e-14, hard cap per design notes).
double rician_power_cdf(double x, const RicianFading& fading, int ell_max = 0);

// Eq.-(5)-derived power density f_X(x) = b e^{-K-bx} I0(2 sqrt(K b x)).
double rician_power_pdf(double x, const RicianFading& fading);

ProductMoments double_rician_moments(const RicianFading& fading_u,
                                     const RicianFading& fading_d,
                                     MomentConvention convention);

// Prop.-1 CLT parameters exactly as printed: mu_Z = (N+1)*mean,
// sigma_Z^2 = (N+1)*variance. (The Monte-Carlo cascade of N elements has
// mean N*mean; model builders that must match the oracle call this with
// N-1, see performance::make_mode_context.)
CltParams clt_params(int n_elements, const ProductMoments& m);

// One draw of a Rician power sample (E[X] = Omega).
double sample_rician_power(const RicianFading& fading, rng::Xoshiro256pp& gen);

// One draw of Z = sum_{k=1..N} |h_u,k||h_d,k|.
double sample_cascade_amplitude(const RicianFading& fading_u,
                                const RicianFading& fading_d, int n_elements,
                                rng::Xoshiro256pp& gen);

}  // namespace aeris
