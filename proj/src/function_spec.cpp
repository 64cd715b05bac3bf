#include "genfrac/function_spec.hpp"

#include <charconv>
#include <cmath>

#include "genfrac/error.hpp"

namespace genfrac {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& why) {
  throw Error(ErrorCode::ParseError,
              "at position " + std::to_string(pos) + " in '" + std::string(text) + "': " + why);
}

std::string format_real(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

double FunctionSpec::operator()(double t) const {
  return std::visit(overloaded{
                        [](const Const& f) { return f.c; },
                        [t](const Power& f) { return f.mu == 0.0 ? 1.0 : std::pow(t, f.mu); },
                        [t](const Poly& f) {
                          double acc = 0.0;
                          for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * t + *it;
                          return acc;
                        },
                        [t](const Exp& f) { return std::exp(f.lambda * t); },
                        [t](const LogPower& f) {
                          return f.k == 0.0 ? 1.0 : std::pow(std::log(t / f.base_point), f.k);
                        },
                        [t](const Sin& f) { return std::sin(f.omega * t); },
                    },
                    term);
}

bool FunctionSpec::is_power_combination() const noexcept {
  return std::holds_alternative<Const>(term) || std::holds_alternative<Power>(term) ||
         std::holds_alternative<Poly>(term);
}

bool FunctionSpec::analytic_at_zero() const noexcept {
  if (const auto* p = std::get_if<Power>(&term)) return p->mu >= 0.0 && p->mu == std::floor(p->mu);
  return !std::holds_alternative<LogPower>(term);
}

FunctionSpec parse_function_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) parse_fail(text, text.size(), "expected ':' after the function name");
  const std::string_view name = text.substr(0, colon);

  std::vector<double> args;
  std::size_t pos = colon + 1;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view field = text.substr(pos, end - pos);
    if (field.empty()) parse_fail(text, pos, "expected a real number");
    double v = 0.0;
    // from_chars rejects a leading '+', accept it here
    const char* first = field.data() + (field.front() == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      parse_fail(text, pos, "'" + std::string(field) + "' is not a real number");
    }
    if (!std::isfinite(v)) parse_fail(text, pos, "arguments must be finite");
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }

  auto want = [&](std::size_t n) {
    if (args.size() != n) {
      parse_fail(text, colon + 1,
                 "'" + std::string(name) + "' takes " + std::to_string(n) + " argument(s), got " +
                     std::to_string(args.size()));
    }
  };

  FunctionSpec f;
  if (name == "const") {
    want(1);
    f.term = Const{args[0]};
  } else if (name == "pow") {
    want(1);
    f.term = Power{args[0]};
  } else if (name == "poly") {
    f.term = Poly{args};
  } else if (name == "exp") {
    want(1);
    f.term = Exp{args[0]};
  } else if (name == "logpow") {
    want(2);
    if (args[0] < 0.0) parse_fail(text, colon + 1, "logpow exponent k must be >= 0");
    if (!(args[1] > 0.0)) parse_fail(text, colon + 1, "logpow base point must be > 0");
    f.term = LogPower{args[0], args[1]};
  } else if (name == "sin") {
    want(1);
    f.term = Sin{args[0]};
  } else {
    parse_fail(text, 0, "unknown function '" + std::string(name) + "'");
  }
  return f;
}

std::string to_string(const FunctionSpec& f) {
  return std::visit(overloaded{
                        [](const Const& g) { return "const:" + format_real(g.c); },
                        [](const Power& g) { return "pow:" + format_real(g.mu); },
                        [](const Poly& g) {
                          std::string s = "poly:";
                          for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
                            if (i) s += ',';
                            s += format_real(g.coeffs[i]);
                          }
                          return s;
                        },
                        [](const Exp& g) { return "exp:" + format_real(g.lambda); },
                        [](const LogPower& g) { return "logpow:" + format_real(g.k) + "," + format_real(g.base_point); },
                        [](const Sin& g) { return "sin:" + format_real(g.omega); },
                    },
                    f.term);
}

}  // namespace genfrac
