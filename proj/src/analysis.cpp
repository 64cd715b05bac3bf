#include "genfrac/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "genfrac/error.hpp"
#include "genfrac/quadrature.hpp"
#include "genfrac/special_functions.hpp"

namespace genfrac {
namespace {

constexpr int kSupGrid = 2049;
constexpr double kNormTolerance = 1e-12;

void check_interval(double a, double b) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
    throw Error(ErrorCode::PreconditionViolated, "requires 0 < a < b < inf");
  }
}

template <typename F>
double xpc_norm_impl(const F& f, const SpaceParams& space, double a, double b) {
  check_interval(a, b);
  if (!(space.p >= 1.0)) throw Error(ErrorCode::PreconditionViolated, "requires p >= 1");
  const double c = space.c;
  auto weighted = [&](double x) {
    const double v = std::abs(std::pow(x, c) * f(x));
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteIntegrand, "x^c f(x) is not finite at " + format_number(x));
    return v;
  };

  if (space.p == INFINITY) {
    const double log_ratio = std::log(b / a);
    auto grid_point = [&](double lo, double lr, int i) {
      return i == kSupGrid - 1 ? lo * std::exp(lr) : lo * std::exp(lr * i / (kSupGrid - 1));
    };
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i < kSupGrid; ++i) {
      const double v = weighted(grid_point(a, log_ratio, i));
      if (v > best) {
        best = v;
        best_i = i;
      }
    }
    // refine between the neighbours of the coarse maximum
    const double lo = grid_point(a, log_ratio, std::max(best_i - 1, 0));
    const double hi = grid_point(a, log_ratio, std::min(best_i + 1, kSupGrid - 1));
    const double fine_ratio = std::log(hi / lo);
    for (int i = 0; i < kSupGrid; ++i) best = std::max(best, weighted(grid_point(lo, fine_ratio, i)));
    return best;
  }

  const double p = space.p;
  auto integrand = [&](double x) { return std::pow(weighted(x), p) / x; };
  QuadratureEstimate est = integrate_adaptive(integrand, a, b, kNormTolerance);
  return std::pow(est.value, 1.0 / p);
}

}  // namespace

IdentityReport compare_values(double lhs, double rhs, double tolerance) {
  IdentityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::abs(lhs - rhs);
  r.rel_diff = std::abs(rhs) > 0.0 ? r.abs_diff / std::abs(rhs) : (r.abs_diff == 0.0 ? 0.0 : INFINITY);
  r.tolerance_used = tolerance;
  r.passed = std::abs(rhs) < 1e-14 ? r.abs_diff <= tolerance : r.rel_diff <= tolerance;
  return r;
}

double xpc_norm(const FunctionSpec& f, const SpaceParams& space, double a, double b) {
  return xpc_norm_impl(f, space, a, b);
}

double xpc_norm(const RealFunction& f, const SpaceParams& space, double a, double b) {
  return xpc_norm_impl(f, space, a, b);
}

double bound_constant_K(const OperatorParams& params, const SpaceParams& space, double a, double b) {
  validate(params);
  check_interval(a, b);
  if (!params.is_left()) throw Error(ErrorCode::PreconditionViolated, "requires a left-sided operator");
  if (params.rho < space.c) throw Error(ErrorCode::PreconditionViolated, "requires rho >= c");
  if (params.eta < 0.0) throw Error(ErrorCode::PreconditionViolated, "requires eta >= 0");

  const double alpha = params.alpha, rho = params.rho;
  const double power = space.c - rho * (alpha + params.eta) - 1.0;
  // u = 1 + D s. The factor d^(alpha-1) goes into the Jacobi weight, leaving
  // ((u^rho - 1) / d)^(alpha-1), which is analytic and tends to rho^(alpha-1).
  const double span = b / a - 1.0;
  auto smooth = [&](double s) {
    const double d = span * s;
    const double ratio = d == 0.0 ? rho : std::expm1(rho * std::log1p(d)) / d;
    return std::pow(1.0 + d, power) * std::pow(ratio, alpha - 1.0);
  };
  CompositeJacobiOptions opt;
  opt.grade_lo = true;
  double prev = NAN, value = NAN;
  bool settled = false;
  for (int points : {12, 20, 28}) {
    opt.points_per_panel = points;
    value = integrate_jacobi_composite(smooth, 0.0, alpha - 1.0, opt);
    if (!std::isfinite(value)) break;
    if (std::abs(value - prev) <= 1e-12 * std::abs(value)) {
      settled = true;
      break;
    }
    prev = value;
  }
  if (!settled) throw Error(ErrorCode::DivergentConstant, "the integral defining K did not converge");
  value *= std::pow(span, alpha);
  return std::pow(rho, 1.0 - params.beta) * std::pow(b, rho * (alpha + params.eta) + params.kappa) / gamma(alpha) *
         value;
}

IdentityReport check_boundedness(const OperatorParams& params, const FunctionSpec& f, const SpaceParams& space,
                                 double a, double b) {
  OperatorParams on_ab = params;
  on_ab.domain = {a, b};
  const double K = bound_constant_K(on_ab, space, a, b);
  // Norm nodes can land exactly on b; the image is continuous there.
  const double last = std::nextafter(b, a);
  RealFunction image = [&](double x) { return x <= a ? 0.0 : eval_left(on_ab, f, std::min(x, last)).value; };
  const double lhs = xpc_norm(image, space, a, b);
  const double rhs = K * xpc_norm(f, space, a, b);

  IdentityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::abs(lhs - rhs);
  r.rel_diff = rhs > 0.0 ? std::max(0.0, lhs - rhs) / rhs : (lhs > 0.0 ? INFINITY : 0.0);
  r.tolerance_used = kBoundednessSlack;
  r.passed = lhs <= rhs * (1.0 + kBoundednessSlack);
  return r;
}

IdentityReport check_shift(const OperatorParams& params, double gamma, const FunctionSpec& f, double x) {
  const OperatorParams shifted = shift_params(params, gamma);
  const double rhs = evaluate(shifted, f, x).value;
  double lhs = 0.0;
  if (gamma == 0.0) {
    lhs = evaluate(params, f, x).value;
  } else {
    const double weight_exp = params.is_left() ? params.rho * gamma : gamma;
    RealFunction weighted = [&](double t) { return std::pow(t, weight_exp) * f(t); };
    lhs = evaluate(params, weighted, x).value;
  }
  return compare_values(lhs, rhs, kShiftTolerance);
}

IdentityReport check_semigroup(const OperatorParams& outer, const OperatorParams& inner, const FunctionSpec& f,
                               double x) {
  const OperatorParams composed = compose_params(outer, inner);
  const double rhs = evaluate(composed, f, x).value;
  // Graded outer nodes can round onto the inner operator's start point, where
  // its value is 0 by continuity.
  const double start = inner.is_left() ? inner.domain.a : inner.domain.b;
  RealFunction inner_image = [&](double y) {
    if (inner.is_left() ? y <= start : y >= start) return 0.0;
    return evaluate(inner, f, y).value;
  };
  const double lhs = evaluate(outer, inner_image, x).value;
  return compare_values(lhs, rhs, kSemigroupTolerance);
}

IdentityReport check_product_integration(const OperatorParams& params_left, const FunctionSpec& f,
                                         const FunctionSpec& g, double a, double b) {
  check_interval(a, b);
  OperatorParams left = params_left;
  left.domain = {a, b};
  left.side = LeftSided{};
  OperatorParams right = left;
  right.side = RightSided{};
  validate(left);

  const double rho = left.rho;
  constexpr double kOuterTolerance = 1e-10;
  auto lhs_integrand = [&](double x) { return std::pow(x, rho - 1.0) * f(x) * eval_left(left, g, x).value; };
  auto rhs_integrand = [&](double x) { return std::pow(x, rho - 1.0) * g(x) * eval_right(right, f, x).value; };
  const double lhs = integrate_adaptive(lhs_integrand, a, b, kOuterTolerance).value;
  const double rhs = integrate_adaptive(rhs_integrand, a, b, kOuterTolerance).value;
  return compare_values(lhs, rhs, kProductTolerance);
}

}  // namespace genfrac
