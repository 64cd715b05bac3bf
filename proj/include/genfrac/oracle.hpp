#pragma once

#include <variant>

#include "genfrac/evaluator.hpp"
#include "genfrac/operator_model.hpp"
#include "genfrac/quadrature.hpp"

namespace genfrac {

/// Brute-force evaluation settings. The panel count doubles at each of
/// refinement_levels successive levels.
struct OracleConfig {
  int n_panels = 64;
  int per_panel_points = 15;
  int refinement_levels = 3;
};

/// Left operator evaluated directly in the original variable tau with a
/// graded mesh toward tau = x (strength alpha - 1). When a = 0 the interval is
/// split at x/2 and the lower half is graded toward 0 as well, using the
/// exponent of a Power integrand when there is one; callables are assumed
/// bounded near 0. The error estimate is the difference between the two
/// finest levels.
///
/// Never touches the Gauss-Jacobi machinery.
QuadratureEstimate oracle_eval_left(const OperatorParams& params, const FunctionSpec& f, double x,
                                    const OracleConfig& cfg = {});
QuadratureEstimate oracle_eval_left(const OperatorParams& params, const RealFunction& f, double x,
                                    const OracleConfig& cfg = {});

/// I^alpha_{0+} t^mu at x: Gamma(mu+1) / Gamma(mu+1+alpha) x^(mu+alpha)
struct RLPowerArgs {
  double mu = 0.0;
  double alpha = 1.0;
  double x = 1.0;
};
/// Hadamard integral of f = 1 from a to x: log(x/a)^alpha / Gamma(alpha+1)
struct HadamardConstArgs {
  double alpha = 1.0;
  double a = 1.0;
  double x = 1.0;
};
/// Generalized left operator with a = 0 applied to t^mu.
struct GenPowerArgs {
  OperatorParams params;
  double mu = 0.0;
  double x = 1.0;
};

using ClosedFormArgs = std::variant<RLPowerArgs, HadamardConstArgs, GenPowerArgs>;

/// Reference antiderivative identities; ArgsOutOfRange outside each formula's range.
double oracle_closed_form(const ClosedFormArgs& args);

}  // namespace genfrac
