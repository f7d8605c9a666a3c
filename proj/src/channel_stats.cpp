#include "aeris/channel_stats.hpp"

#include <cmath>

#include "aeris/errors.hpp"
#include "aeris/special.hpp"
#include "aeris/units.hpp"

namespace aeris {

namespace {

constexpr int kEllHardCap = 2000;
constexpr double kTailTol = 1e-14;

// Amplitude via two polar uniforms: |mu + s(n1 + i n2)| with
// n1^2 + n2^2 = -2 ln u1, n1 = sqrt(-2 ln u1) cos(2 pi u2).
double rician_power_draw(double mu, double s, rng::Xoshiro256pp& gen) {
  const double r = -2.0 * std::log(gen.uniform_pos());
  const double c = std::cos(2.0 * units::kPi * gen.uniform());
  return mu * mu + 2.0 * mu * s * std::sqrt(r) * c + s * s * r;
}

}  // namespace

RicianFading RicianFading::create(double K, double Omega) {
  if (!(K >= 0.0)) throw SchemaError("RicianFading: K must be >= 0");
  if (!(Omega > 0.0)) throw SchemaError("RicianFading: Omega must be > 0");
  return RicianFading{K, Omega};
}

double rician_power_cdf(double x, const RicianFading& fading, int ell_max) {
  if (x < 0.0) throw SchemaError("rician_power_cdf: x must be >= 0");
  if (x == 0.0) return 0.0;
  const double K = fading.K;
  const double bx = fading.b() * x;

  // pk: Poisson(K) pmf at ell; inner: Poisson(bx) cdf up to ell.
  double pk = std::exp(-K);
  double inner_term = std::exp(-bx);
  double inner_cdf = inner_term;
  double survival = pk * inner_cdf;  // running sum of pk * PoisCDF
  double mass_seen = pk;
  const int cap = ell_max > 0 ? ell_max : kEllHardCap;
  int ell = 0;
  while (ell < cap) {
    if (ell_max == 0 && 1.0 - mass_seen < kTailTol) break;
    ++ell;
    pk *= K / ell;
    inner_term *= bx / ell;
    inner_cdf += inner_term;
    survival += pk * inner_cdf;
    mass_seen += pk;
  }
  const double residual = 1.0 - mass_seen;  // bound: remaining terms <= tail
  if (residual > 1e-10)
    throw NumericalError("rician_power_cdf: truncation residual above 1e-10");
  double cdf = 1.0 - survival;
  if (cdf < 0.0) cdf = 0.0;
  if (cdf > 1.0) cdf = 1.0;
  return cdf;
}

double rician_power_pdf(double x, const RicianFading& fading) {
  if (x < 0.0) throw SchemaError("rician_power_pdf: x must be >= 0");
  const double b = fading.b();
  const double K = fading.K;
  const double y = 2.0 * std::sqrt(K * b * x);
  // b * exp(-K - bx + y) * (I0(y) e^{-y}) keeps every factor in range.
  return b * std::exp(-K - b * x + y) * special::i0_scaled(y);
}

ProductMoments double_rician_moments(const RicianFading& fu,
                                     const RicianFading& fd,
                                     MomentConvention convention) {
  ProductMoments out;
  if (convention == MomentConvention::Printed) {
    const double sigma2 = fu.Omega * fd.Omega;
    const double sigma = std::sqrt(sigma2);
    const double zu = -fu.mu2() / (2.0 * fu.Omega);
    const double zd = -fd.mu2() / (2.0 * fd.Omega);
    out.mean = sigma * (units::kPi / 2.0) * special::kummer_1f1(-0.5, 1.0, zu) *
               special::kummer_1f1(-0.5, 1.0, zd);
    out.variance = 4.0 * sigma2 * (1.0 + fu.mu2() / (2.0 * fu.Omega)) *
                       (1.0 + fd.mu2() / (2.0 * fd.Omega)) -
                   out.mean * out.mean;
  } else {
    // E[R_i] = sqrt(pi * Omega_i / (4(K_i+1))) * 1F1(-1/2; 1; -K_i);
    // E[R_u^2 R_d^2] = Omega_u * Omega_d exactly.
    const double mu_u = std::sqrt(units::kPi * fu.Omega / (4.0 * (fu.K + 1.0))) *
                        special::kummer_1f1(-0.5, 1.0, -fu.K);
    const double mu_d = std::sqrt(units::kPi * fd.Omega / (4.0 * (fd.K + 1.0))) *
                        special::kummer_1f1(-0.5, 1.0, -fd.K);
    out.mean = mu_u * mu_d;
    out.variance = fu.Omega * fd.Omega - out.mean * out.mean;
  }
  if (!(out.variance > 0.0))
    throw NumericalError("double_rician_moments: non-positive variance");
  return out;
}

CltParams clt_params(int n_elements, const ProductMoments& m) {
  CltParams p;
  const double scale = static_cast<double>(n_elements) + 1.0;
  p.mu_z = scale * m.mean;
  p.sigma_z2 = scale * m.variance;
  p.lambda = p.mu_z * p.mu_z / (2.0 * p.sigma_z2);
  p.lambda_prime = p.lambda / scale;
  p.nu = 1;
  return p;
}

double sample_rician_power(const RicianFading& fading,
                           rng::Xoshiro256pp& gen) {
  return rician_power_draw(fading.mu(), std::sqrt(fading.sigma_scatter2()),
                           gen);
}

double sample_cascade_amplitude(const RicianFading& fu, const RicianFading& fd,
                                int n_elements, rng::Xoshiro256pp& gen) {
  const double mu_u = fu.mu(), su = std::sqrt(fu.sigma_scatter2());
  const double mu_d = fd.mu(), sd = std::sqrt(fd.sigma_scatter2());
  double z = 0.0;
  for (int k = 0; k < n_elements; ++k) {
    const double au = std::sqrt(rician_power_draw(mu_u, su, gen));
    const double ad = std::sqrt(rician_power_draw(mu_d, sd, gen));
    z += au * ad;
  }
  return z;
}

}  // namespace aeris
