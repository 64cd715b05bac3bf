#include "genfrac/oracle.hpp"

#include <cmath>

#include "genfrac/error.hpp"
#include "genfrac/special_functions.hpp"

namespace genfrac {
namespace {

// f_exp: exponent of f's own singularity at tau = 0 (0 if f is bounded there).
template <typename F>
QuadratureEstimate oracle_impl(const OperatorParams& p, const F& f, double x, const OracleConfig& cfg, double f_exp) {
  validate(p);
  if (!p.is_left()) throw Error(ErrorCode::ArgsOutOfRange, "the oracle covers the left-sided operator");
  const double a = p.domain.a;
  if (!std::isfinite(a)) throw Error(ErrorCode::ArgsOutOfRange, "the oracle needs a finite lower bound");
  if (!(x > a && x < p.domain.b)) throw Error(ErrorCode::XOutOfDomain, "x must lie in (a, b)");
  if (cfg.n_panels < 8 || cfg.refinement_levels < 2) {
    throw Error(ErrorCode::ArgsOutOfRange, "oracle needs n_panels >= 8 and refinement_levels >= 2");
  }
  if (cfg.per_panel_points != 15) throw Error(ErrorCode::ArgsOutOfRange, "only 15-point panels are available");

  const double alpha = p.alpha, rho = p.rho;
  const double tau_exp = rho * (p.eta + 1.0) - 1.0;
  const double x_rho = std::pow(x, rho);
  const double prefactor = std::pow(rho, 1.0 - p.beta) * std::pow(x, p.kappa) / gamma(alpha);

  // kernel with tau = x - d: x^rho - tau^rho = -x^rho expm1(rho log1p(-d/x))
  auto near_x = [&](double tau, double d) {
    const double gap = -x_rho * std::expm1(rho * std::log1p(-d / x));
    return std::pow(tau, tau_exp) * std::pow(gap, alpha - 1.0) * f(tau);
  };
  auto near_zero = [&](double tau) {
    return std::pow(tau, tau_exp) * std::pow(x_rho - std::pow(tau, rho), alpha - 1.0) * f(tau);
  };

  auto level = [&](int panels) {
    if (a == 0.0) {
      const double mid = 0.5 * x;
      const double lower_strength = std::min(0.0, tau_exp + f_exp);
      QuadratureEstimate lo = graded_mesh_singular(near_zero, 0.0, mid, SingularEnd::Lo, lower_strength, panels);
      QuadratureEstimate hi = graded_mesh_singular(near_x, mid, x, SingularEnd::Hi, alpha - 1.0, panels);
      return QuadratureEstimate{lo.value + hi.value, lo.abs_error_estimate + hi.abs_error_estimate,
                                lo.evaluations + hi.evaluations, true};
    }
    return graded_mesh_singular(near_x, a, x, SingularEnd::Hi, alpha - 1.0, panels);
  };

  QuadratureEstimate prev = level(cfg.n_panels);
  QuadratureEstimate cur = prev;
  std::int64_t evaluations = prev.evaluations;
  for (int k = 1; k < cfg.refinement_levels; ++k) {
    prev = cur;
    cur = level(cfg.n_panels << k);
    evaluations += cur.evaluations;
  }
  QuadratureEstimate out;
  out.value = prefactor * cur.value;
  out.abs_error_estimate = std::abs(prefactor * (cur.value - prev.value));
  out.evaluations = evaluations;
  if (!std::isfinite(out.value)) throw Error(ErrorCode::NonFiniteIntegrand, "oracle value is not finite");
  return out;
}

}  // namespace

QuadratureEstimate oracle_eval_left(const OperatorParams& params, const FunctionSpec& f, double x,
                                    const OracleConfig& cfg) {
  const auto* power = std::get_if<Power>(&f.term);
  return oracle_impl(params, f, x, cfg, power ? std::min(0.0, power->mu) : 0.0);
}

QuadratureEstimate oracle_eval_left(const OperatorParams& params, const RealFunction& f, double x,
                                    const OracleConfig& cfg) {
  return oracle_impl(params, f, x, cfg, 0.0);
}

double oracle_closed_form(const ClosedFormArgs& args) {
  if (const auto* rl = std::get_if<RLPowerArgs>(&args)) {
    if (!(rl->alpha > 0.0) || !(rl->mu > -1.0) || !(rl->x > 0.0)) {
      throw Error(ErrorCode::ArgsOutOfRange, "RLPower needs alpha > 0, mu > -1, x > 0");
    }
    return std::exp(log_gamma(rl->mu + 1.0) - log_gamma(rl->mu + 1.0 + rl->alpha)) *
           std::pow(rl->x, rl->mu + rl->alpha);
  }
  if (const auto* h = std::get_if<HadamardConstArgs>(&args)) {
    if (!(h->alpha > 0.0) || !(h->a > 0.0) || !(h->x > h->a)) {
      throw Error(ErrorCode::ArgsOutOfRange, "HadamardConst needs alpha > 0 and 0 < a < x");
    }
    return std::pow(std::log(h->x / h->a), h->alpha) / gamma(h->alpha + 1.0);
  }
  const auto& g = std::get<GenPowerArgs>(args);
  const OperatorParams& p = g.params;
  validate(p);
  // u = (tau/x)^rho turns the integral into x^(kappa+rho(alpha+eta)+mu) rho^(-beta) B(eta + mu/rho + 1, alpha) / Gamma(alpha)
  const double e = p.eta + g.mu / p.rho + 1.0;
  if (!p.is_left() || p.domain.a != 0.0 || !(e > 0.0) || !(g.x > 0.0)) {
    throw Error(ErrorCode::ArgsOutOfRange, "GenPower needs a left operator from 0, eta + mu/rho > -1, x > 0");
  }
  return std::exp(-p.beta * std::log(p.rho) + (p.kappa + p.rho * (p.alpha + p.eta) + g.mu) * std::log(g.x) +
                  log_gamma(e) - log_gamma(e + p.alpha));
}

}  // namespace genfrac
