#pragma once

namespace psychoprobe::sf {

// Regularized incomplete beta I_x(a,b), continued fraction (Lentz) with the
// symmetry switch at x = (a+1)/(a+b+2). Prefactor evaluated in log space, so
// tail values down to the denormal range come out correctly (the F tails in
// the reporting pipeline reach ~1e-133).
double reg_inc_beta(double a, double b, double x);

// Regularized incomplete gamma P(a,x) and Q(a,x) = 1 - P(a,x).
double reg_gamma_p(double a, double x);
double reg_gamma_q(double a, double x);

double normal_pdf(double z);
double normal_cdf(double z);
double normal_sf(double z);

// Wichura's AS 241 (PPND16); |error| < 1e-15 over (0,1).
double normal_quantile(double p);

// two-sided p for Student t with df degrees of freedom
double student_t_sf2(double t, double df);

// upper tail of the F distribution
double f_sf(double f, double df1, double df2);

double chisq_sf(double x, double df);

// CDF of the studentized range with k groups and df error degrees of
// freedom; Gauss-Legendre double quadrature, ~1e-6 absolute accuracy.
double studentized_range_cdf(double q, int k, double df);

} // namespace psychoprobe::sf
