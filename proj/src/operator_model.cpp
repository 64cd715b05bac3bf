#include "genfrac/operator_model.hpp"

#include <cmath>
#include <string>

#include "genfrac/error.hpp"

namespace genfrac {

std::string_view to_string(ClassicalReduction r) noexcept {
  switch (r) {
    case ClassicalReduction::RiemannLiouville: return "riemann-liouville";
    case ClassicalReduction::Katugampola: return "katugampola";
    case ClassicalReduction::HadamardLimit: return "hadamard";
    case ClassicalReduction::ErdelyiKober: return "erdelyi-kober";
    case ClassicalReduction::WeylType: return "weyl";
    case ClassicalReduction::LiouvilleType: return "liouville";
    case ClassicalReduction::General: return "general";
  }
  return "general";
}

void validate(const OperatorParams& p) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
    throw Error(ErrorCode::NonPositiveAlpha, "alpha must be positive and finite, got " + format_number(p.alpha));
  }
  if (!(p.rho > 0.0) || !std::isfinite(p.rho)) {
    throw Error(ErrorCode::NonPositiveRho, "rho must be positive and finite, got " + format_number(p.rho));
  }
  if (!std::isfinite(p.beta) || !std::isfinite(p.eta) || !std::isfinite(p.kappa)) {
    throw Error(ErrorCode::ArgsOutOfRange, "beta, eta and kappa must be finite");
  }
  if (const auto* g = std::get_if<RightSidedGeneral>(&p.side); g && !std::isfinite(g->omega)) {
    throw Error(ErrorCode::ArgsOutOfRange, "omega must be finite");
  }

  const double a = p.domain.a;
  const double b = p.domain.b;
  if (std::isnan(a) || std::isnan(b) || !(a < b) || b == -INFINITY || a == INFINITY) {
    throw Error(ErrorCode::BadDomain, "need a < b");
  }
  if (a == -INFINITY) {
    if (p.rho != 1.0) throw Error(ErrorCode::BadDomain, "a = -inf is only supported for rho = 1");
  } else if (a < 0.0) {
    throw Error(ErrorCode::BadDomain, "lower bound a must be >= 0, got " + format_number(a));
  }
  if (a == 0.0 && p.is_left() && !(p.eta > -1.0)) {
    throw Error(ErrorCode::EtaTooSmall, "a = 0 needs eta > -1 for the u^eta weight to be integrable");
  }
}

ClassicalReduction classify(const OperatorParams& p) {
  validate(p);
  if (p.domain.a == -INFINITY) return ClassicalReduction::WeylType;
  if (p.is_right() && p.domain.b == INFINITY) return ClassicalReduction::LiouvilleType;
  if (std::holds_alternative<RightSidedGeneral>(p.side)) return ClassicalReduction::General;
  if (p.rho == 1.0 && p.eta == 0.0 && p.kappa == 0.0) return ClassicalReduction::RiemannLiouville;
  if (p.beta == 0.0 && p.kappa == -p.rho * (p.alpha + p.eta)) return ClassicalReduction::ErdelyiKober;
  if (p.beta == p.alpha && p.eta == 0.0 && p.kappa == 0.0 && p.rho != 1.0) return ClassicalReduction::Katugampola;
  return ClassicalReduction::General;
}

OperatorParams shift_params(const OperatorParams& p, double gamma) {
  validate(p);
  OperatorParams out = p;
  if (p.is_left()) {
    out.eta = p.eta + gamma;
  } else {
    out.kappa = p.kappa + gamma;
  }
  validate(out);
  return out;
}

OperatorParams compose_params(const OperatorParams& outer, const OperatorParams& inner) {
  validate(outer);
  validate(inner);
  if (outer.rho != inner.rho || outer.side.index() != inner.side.index() || !(outer.domain == inner.domain)) {
    throw Error(ErrorCode::MismatchedRhoOrSide, "composition needs the same rho, side and domain");
  }
  if (std::holds_alternative<RightSidedGeneral>(outer.side)) {
    throw Error(ErrorCode::IncompatibleComposition, "no index law for the omega-generalized right operator");
  }
  const double rho = outer.rho;
  OperatorParams out = outer;
  out.alpha = outer.alpha + inner.alpha;
  out.beta = outer.beta + inner.beta;
  if (outer.is_left()) {
    if (inner.kappa != -rho * outer.eta) {
      throw Error(ErrorCode::IncompatibleComposition, "left composition needs inner.kappa == -rho * outer.eta");
    }
    out.eta = inner.eta;
    out.kappa = outer.kappa;
  } else {
    if (outer.kappa != -rho * inner.eta) {
      throw Error(ErrorCode::IncompatibleComposition, "right composition needs outer.kappa == -rho * inner.eta");
    }
    out.eta = outer.eta;
    out.kappa = inner.kappa;
  }
  validate(out);
  return out;
}

}  // namespace genfrac
