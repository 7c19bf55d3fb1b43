// Beta/binomial special functions and the Jensen-Shannon divergence between
// beta densities. Everything here is a pure function; all heavy evaluation is
// done in log space so that products of many small masses do not underflow.
#pragma once

#include "basketoc/types.hpp"

namespace basketoc {

/// ln Gamma(x) for x > 0. Lanczos below 10, Stirling with a truncated
/// asymptotic correction above.
double log_gamma(double x);

/// ln B(a,b) for a,b > 0, arranged to avoid cancellation for large shapes.
double log_beta(double a, double b);

/// ln C(n,r).
double log_binom_coef(int n, int r);

/// Binomial point mass C(n,r) p^r (1-p)^(n-r); 0^0 is treated as 1.
double binom_pmf(int n, int r, double p);

/// Regularized incomplete beta I_x(a,b), continued fraction with the usual
/// symmetry switch.
double reg_inc_beta(double a, double b, double x);

/// Upper tail P(X > p0) for X ~ Beta(params). The smaller of the two
/// regularized pieces is evaluated directly so the result keeps absolute
/// accuracy near 0 and 1.
double beta_tail(const BetaParams& params, double p0);

/// Beta-binomial predictive mass C(m,x) B(a+x, b+m-x) / B(a,b).
double beta_binom_pmf(int m, int x, const BetaParams& params);

/// Jensen-Shannon divergence between two beta densities, logarithms base 2,
/// so the result lies in [0,1]. Fixed-order Gauss-Legendre on dyadically
/// graded panels; for shapes < 1 the integrand is regularized by a power-law
/// change of variables at the singular endpoint. Throws accuracy_error when
/// a shape is below 0.01 (no accuracy guarantee that close to the spike).
double jsd_beta(const BetaParams& p, const BetaParams& q);

}  // namespace basketoc
