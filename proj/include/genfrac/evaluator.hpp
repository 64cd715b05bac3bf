#pragma once

#include <functional>
#include <string_view>

#include "genfrac/function_spec.hpp"
#include "genfrac/operator_model.hpp"

namespace genfrac {

enum class EvalMethod { JacobiSpectral, GradedMesh, ClosedForm, InfiniteTransform };

std::string_view to_string(EvalMethod m) noexcept;

struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  EvalMethod method = EvalMethod::JacobiSpectral;
};

struct EvalOptions {
  /// Relative disagreement between successive rule sizes that triggers another refinement.
  double rel_tol = 1e-11;
  /// Nodes of the first plain Gauss-Jacobi rule; doubled on each refinement.
  int base_nodes = 40;
  int max_refinements = 2;
};

/// Arbitrary real integrand, used when the function is not in the catalog
/// (shifted integrands, nested operator applications).
using RealFunction = std::function<double(double)>;

/// Left-sided operator at a < x < b.
///
/// With a = 0 and a power-combination integrand the closed form is used.
/// Otherwise the substitution u = (tau/x)^rho moves the kernel singularity
/// into a Gauss-Jacobi weight (1-u)^(alpha-1) u^eta; for a > 0 the interval
/// [(a/x)^rho, 1] is mapped affinely to [0, 1] and u^eta joins the integrand.
/// a = -inf (rho = 1) maps the half-line onto (0, 1].
EvalResult eval_left(const OperatorParams& params, const FunctionSpec& f, double x, const EvalOptions& opt = {});
EvalResult eval_left(const OperatorParams& params, const RealFunction& f, double x, const EvalOptions& opt = {});

/// Right-sided operator (plain or omega-generalized) at a < x < b.
/// Finite b uses w = (tau^rho - x^rho) / (b^rho - x^rho); b = inf uses v = (x/tau)^rho
/// and throws DivergentTail when refinement does not settle.
EvalResult eval_right(const OperatorParams& params, const FunctionSpec& f, double x, const EvalOptions& opt = {});
EvalResult eval_right(const OperatorParams& params, const RealFunction& f, double x, const EvalOptions& opt = {});

/// Dispatches on params.side.
EvalResult evaluate(const OperatorParams& params, const FunctionSpec& f, double x, const EvalOptions& opt = {});
EvalResult evaluate(const OperatorParams& params, const RealFunction& f, double x, const EvalOptions& opt = {});

/// Left operator with a = 0 applied to tau^mu:
///   rho^(-beta) x^(kappa + rho(alpha+eta) + mu) Gamma(eta + mu/rho + 1) / Gamma(alpha + eta + mu/rho + 1).
double eval_power_closed_form(const OperatorParams& params, double mu, double x);

/// Hadamard integral (1/Gamma(alpha)) int_a^x log(x/tau)^(alpha-1) f(tau) dtau / tau, 0 < a < x.
double eval_hadamard(double alpha, double a, const FunctionSpec& f, double x);

/// Evaluates a classical special case through its own textbook kernel, for
/// cross-checking eval_left / eval_right. The parameters must match the
/// reduction (see classify); HadamardLimit uses alpha and domain.a only.
EvalResult eval_classical(ClassicalReduction reduction, const OperatorParams& params, const FunctionSpec& f, double x);

}  // namespace genfrac
