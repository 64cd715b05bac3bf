#pragma once

#include <limits>
#include <string_view>
#include <variant>

namespace genfrac {

struct LeftSided {
  friend bool operator==(const LeftSided&, const LeftSided&) = default;
};
struct RightSided {
  friend bool operator==(const RightSided&, const RightSided&) = default;
};
/// Right-sided operator whose outer factor x^(rho*eta) is replaced by x^omega.
struct RightSidedGeneral {
  double omega = 0.0;
  friend bool operator==(const RightSidedGeneral&, const RightSidedGeneral&) = default;
};

using Side = std::variant<LeftSided, RightSided, RightSidedGeneral>;

/// Integration bounds; a may be -inf (only with rho == 1) and b may be +inf.
struct Domain {
  double a = 0.0;
  double b = std::numeric_limits<double>::infinity();
  friend bool operator==(const Domain&, const Domain&) = default;
};

/// The generalized fractional integral
///
///   left:  rho^(1-beta) x^kappa / Gamma(alpha) * int_a^x tau^(rho(eta+1)-1) (x^rho - tau^rho)^(alpha-1) f(tau) dtau
///   right: rho^(1-beta) x^(rho eta) / Gamma(alpha) * int_x^b tau^(kappa+rho-1) (tau^rho - x^rho)^(alpha-1) f(tau) dtau
struct OperatorParams {
  double alpha = 1.0;
  double beta = 1.0;
  double rho = 1.0;
  double eta = 0.0;
  double kappa = 0.0;
  Side side = LeftSided{};
  Domain domain{};

  bool is_left() const noexcept { return std::holds_alternative<LeftSided>(side); }
  bool is_right() const noexcept { return !is_left(); }

  friend bool operator==(const OperatorParams&, const OperatorParams&) = default;
};

/// Named special cases. WeylType is the a = -inf operator and LiouvilleType the
/// right-sided b = +inf operator, following the naming used for this family.
enum class ClassicalReduction {
  RiemannLiouville,
  Katugampola,
  HadamardLimit,
  ErdelyiKober,
  WeylType,
  LiouvilleType,
  General,
};

std::string_view to_string(ClassicalReduction r) noexcept;

/// Throws genfrac::Error on the first violated constraint.
void validate(const OperatorParams& params);

/// Exact-comparison classification. Precedence: Weyl, Liouville,
/// Riemann-Liouville, Erdelyi-Kober, Katugampola, General.
/// HadamardLimit is never returned; it is a limit rho -> 0+.
ClassicalReduction classify(const OperatorParams& params);

/// Absorbs x^(rho*gamma) (left) or x^gamma (right) multiplying the integrand.
OperatorParams shift_params(const OperatorParams& params, double gamma);

/// Parameters of outer o inner under the index law. Requires
/// inner.kappa == -rho * outer.eta (left) or outer.kappa == -rho * inner.eta (right).
OperatorParams compose_params(const OperatorParams& outer, const OperatorParams& inner);

}  // namespace genfrac
