#pragma once

namespace aeris::special {

// Kummer confluent hypergeometric 1F1(a; b; z) by direct series, with the
// Kummer transform 1F1(a;b;z) = e^z 1F1(b-a;b;-z) applied for z > 0 so the
// series stays alternating-free. Throws NumericalError on non-convergence.
double kummer_1f1(double a, double b, double z);

// exp(-|y|) * I0(y): scaled modified Bessel function of order zero.
double i0_scaled(double y);

// Density of a noncentral chi-square with 1 degree of freedom and
// noncentrality delta, written in the overflow-free two-Gaussian form
//   f(x) = [exp(-(sqrt(x)-sqrt(delta))^2/2) + exp(-(sqrt(x)+sqrt(delta))^2/2)]
//          / (2 sqrt(2 pi x)).
double noncentral_chi2_1_pdf(double x, double delta);

// CDF of the same distribution via the erf pair.
double noncentral_chi2_1_cdf(double x, double delta);

}  // namespace aeris::special
