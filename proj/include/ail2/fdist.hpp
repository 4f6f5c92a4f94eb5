#pragma once
// Regularized incomplete beta function and the F distribution built on it.
// Quantiles are obtained by bisecting the CDF to an absolute tolerance of
// 1e-10, which is what the ICC confidence intervals require.

namespace ail2::stats {

// I_x(a,b) for a,b > 0 and x in [0,1], evaluated with the standard
// continued-fraction expansion (modified Lentz iteration).
double regularized_incomplete_beta(double a, double b, double x);

// P(F <= x) for an F distribution with d1, d2 > 0 degrees of freedom.
double f_cdf(double x, double d1, double d2);

// Smallest x with |f_cdf(x) - p| within tolerance, for p in (0,1).
double f_quantile(double p, double d1, double d2);

}  // namespace ail2::stats
