#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace genfrac {

struct Const {
  double c = 1.0;
};
/// t^mu
struct Power {
  double mu = 0.0;
};
/// c0 + c1 t + ... + cd t^d
struct Poly {
  std::vector<double> coeffs;
};
/// exp(lambda t)
struct Exp {
  double lambda = 0.0;
};
/// log(t / base_point)^k, defined for t > 0. Non-integer k needs t >= base_point.
struct LogPower {
  double k = 1.0;
  double base_point = 1.0;
};
/// sin(omega t)
struct Sin {
  double omega = 1.0;
};

/// Integrands from a closed catalog. Closed-form evaluation paths dispatch on
/// the alternative; anything else goes through quadrature.
struct FunctionSpec {
  std::variant<Const, Power, Poly, Exp, LogPower, Sin> term = Const{};

  double operator()(double t) const;

  /// True for Const, Power and Poly, whose integrals from 0 have closed forms.
  bool is_power_combination() const noexcept;
  /// True if the function is analytic at t = 0 (Const, Poly, Exp, Sin, integer Power).
  bool analytic_at_zero() const noexcept;
};

/// Parses `name:v1,v2,...` with name in {const, pow, poly, exp, logpow, sin}.
/// Throws Error(ParseError) with the character offset of the problem.
FunctionSpec parse_function_spec(std::string_view text);

std::string to_string(const FunctionSpec& f);

}  // namespace genfrac
