#pragma once

namespace simdepth {

/// Regularized incomplete beta I_x(a, b), absolute accuracy ~1e-12.
/// Throws InputError outside a, b > 0, 0 <= x <= 1 and ConvergenceError if
/// the continued fraction does not converge.
double regularized_incomplete_beta(double a, double b, double x);

/// Q(a, x) = P[Gamma(a, 1) > x]. Series below x = a + 1, continued fraction above.
double regularized_upper_gamma(double a, double x);

/// P(a, x) = 1 - Q(a, x), computed directly on the series side.
double regularized_lower_gamma(double a, double x);

}  // namespace simdepth
