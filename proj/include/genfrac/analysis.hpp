#pragma once

#include <functional>
#include <limits>

#include "genfrac/evaluator.hpp"
#include "genfrac/function_spec.hpp"
#include "genfrac/operator_model.hpp"

namespace genfrac {

/// The weighted space X^p_c(a, b): functions with t^(c - 1/p) f(t) in L_p(a, b).
struct SpaceParams {
  double p = 2.0;  // may be +inf
  double c = 0.0;
};

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tolerance_used = 0.0;
  bool passed = false;
};

/// Equality report: relative comparison, absolute when |rhs| < 1e-14.
IdentityReport compare_values(double lhs, double rhs, double tolerance);

/// ||f||_{X^p_c} = (int_a^b |x^c f(x)|^p dx/x)^(1/p); for p = inf the supremum of
/// |x^c f(x)| over a 2049-point geometric grid refined once around the maximum.
double xpc_norm(const FunctionSpec& f, const SpaceParams& space, double a, double b);
double xpc_norm(const RealFunction& f, const SpaceParams& space, double a, double b);

/// Boundedness constant
///   K = rho^(1-beta) b^(rho(alpha+eta)+kappa) / Gamma(alpha) int_1^(b/a) u^(c - rho(alpha+eta) - 1) (u^rho - 1)^(alpha-1) du.
/// Needs 0 < a < b < inf, rho >= c and eta >= 0.
double bound_constant_K(const OperatorParams& params, const SpaceParams& space, double a, double b);

/// lhs = ||I f||, rhs = K ||f||; passes when lhs <= rhs (1 + 1e-6).
IdentityReport check_boundedness(const OperatorParams& params, const FunctionSpec& f, const SpaceParams& space,
                                 double a, double b);

/// Operator applied to t^(rho gamma) f (left) or t^gamma f (right) against the
/// shifted parameters applied to f. Tolerance 1e-9.
IdentityReport check_shift(const OperatorParams& params, double gamma, const FunctionSpec& f, double x);

/// outer(inner f) by nested quadrature against the composed operator. Tolerance 1e-6.
IdentityReport check_semigroup(const OperatorParams& outer, const OperatorParams& inner, const FunctionSpec& f,
                               double x);

/// int_a^b x^(rho-1) f (I_{a+} g) dx against int_a^b x^(rho-1) g (I_{b-} f) dx. Tolerance 1e-6.
IdentityReport check_product_integration(const OperatorParams& params_left, const FunctionSpec& f,
                                         const FunctionSpec& g, double a, double b);

inline constexpr double kShiftTolerance = 1e-9;
inline constexpr double kSemigroupTolerance = 1e-6;
inline constexpr double kProductTolerance = 1e-6;
inline constexpr double kBoundednessSlack = 1e-6;

}  // namespace genfrac
