#pragma once

namespace genfrac {

/// Gamma function on the real line. Throws PoleArgument at 0, -1, -2, ...
///
/// Lanczos approximation (g = 7, nine coefficients) for x >= 0.5 and the
/// reflection formula below that. Positive integers up to 171 are returned
/// as exact factorial products.
double gamma(double x);

/// log(Gamma(x)) for x > 0. Throws NonPositiveArgument otherwise.
double log_gamma(double x);

/// Beta function B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q) for p, q > 0.
double beta(double p, double q);

/// Gamma(num) / Gamma(den) for positive arguments, switching to log-gamma
/// when the individual factors would overflow.
double gamma_ratio(double num, double den);

/// sin(pi * x) with exact argument reduction.
double sin_pi(double x);

}  // namespace genfrac
