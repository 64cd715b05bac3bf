#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "genfrac/analysis.hpp"
#include "genfrac/error.hpp"
#include "genfrac/evaluator.hpp"
#include "genfrac/function_spec.hpp"
#include "genfrac/operator_model.hpp"
#include "genfrac/verify.hpp"

namespace genfrac::cli {

using nlohmann::json;

namespace {

double parse_real(const std::string& text) {
  if (text == "inf" || text == "+inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  double v = 0.0;
  const char* first = text.data() + (text.size() > 1 && text[0] == '+' ? 1 : 0);
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw CLI::ValidationError("not a real number: '" + text + "'");
  return v;
}

json real_json(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

struct ParamFlags {
  std::string alpha = "1", beta = "1", rho = "1", eta = "0", kappa = "0";
  std::string a = "0", b = "inf";
  std::string side = "left";
  std::string omega = "0";

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "order, > 0")->capture_default_str();
    cmd->add_option("--beta", beta, "prefactor exponent")->capture_default_str();
    cmd->add_option("--rho", rho, "power, > 0")->capture_default_str();
    cmd->add_option("--eta", eta)->capture_default_str();
    cmd->add_option("--kappa", kappa)->capture_default_str();
    cmd->add_option("--a", a, "lower end")->capture_default_str();
    cmd->add_option("--b", b, "upper end")->capture_default_str();
    cmd->add_option("--side", side)
        ->check(CLI::IsMember({"left", "right", "right-general"}))
        ->capture_default_str();
    cmd->add_option("--omega", omega, "outer exponent for right-general")->capture_default_str();
  }

  OperatorParams build() const {
    OperatorParams p;
    p.alpha = parse_real(alpha);
    p.beta = parse_real(beta);
    p.rho = parse_real(rho);
    p.eta = parse_real(eta);
    p.kappa = parse_real(kappa);
    p.domain = {parse_real(a), parse_real(b)};
    if (side == "right") {
      p.side = RightSided{};
    } else if (side == "right-general") {
      p.side = RightSidedGeneral{parse_real(omega)};
    }
    return p;
  }
};

json params_json(const OperatorParams& p) {
  json j{{"alpha", real_json(p.alpha)}, {"beta", real_json(p.beta)},  {"rho", real_json(p.rho)},
         {"eta", real_json(p.eta)},     {"kappa", real_json(p.kappa)}, {"a", real_json(p.domain.a)},
         {"b", real_json(p.domain.b)}};
  if (p.is_left()) {
    j["side"] = "left";
  } else if (const auto* g = std::get_if<RightSidedGeneral>(&p.side)) {
    j["side"] = "right-general";
    j["omega"] = real_json(g->omega);
  } else {
    j["side"] = "right";
  }
  return j;
}

json classical_json(ClassicalReduction r, const OperatorParams& p) {
  json j{{"operator", std::string(to_string(r))}, {"alpha", real_json(p.alpha)}};
  switch (r) {
    case ClassicalReduction::RiemannLiouville:
    case ClassicalReduction::HadamardLimit:
      j["a"] = real_json(p.domain.a);
      j["b"] = real_json(p.domain.b);
      break;
    case ClassicalReduction::Katugampola:
      j["rho"] = real_json(p.rho);
      j["a"] = real_json(p.domain.a);
      j["b"] = real_json(p.domain.b);
      break;
    case ClassicalReduction::ErdelyiKober:
      j["rho"] = real_json(p.rho);
      j["eta"] = real_json(p.eta);
      j["a"] = real_json(p.domain.a);
      j["b"] = real_json(p.domain.b);
      break;
    case ClassicalReduction::WeylType:
      j["b"] = real_json(p.domain.b);
      break;
    case ClassicalReduction::LiouvilleType:
      j["a"] = real_json(p.domain.a);
      break;
    case ClassicalReduction::General:
      break;
  }
  j["side"] = p.is_left() ? "left" : "right";
  return j;
}

json report_json(const IdentityReport& r) {
  return {{"lhs", real_json(r.lhs)},
          {"rhs", real_json(r.rhs)},
          {"abs_diff", real_json(r.abs_diff)},
          {"rel_diff", real_json(r.rel_diff)},
          {"tolerance_used", real_json(r.tolerance_used)},
          {"passed", r.passed}};
}

int report_error(const Error& e, std::ostream& err) {
  err << e.what() << '\n';
  if (e.code() == ErrorCode::ParseError) return kUsage;
  return is_validation_error(e.code()) ? kValidation : kNumerical;
}

}  // namespace

std::vector<double> parse_points(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {parse_real(text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw CLI::ValidationError("range must be lo:hi:n");
  const double lo = parse_real(text.substr(0, c1));
  const double hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
  const std::string count = text.substr(c2 + 1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc{} || ptr != count.data() + count.size() || n < 1) {
    throw CLI::ValidationError("range count must be a positive integer");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw CLI::ValidationError("range ends must be finite");
  std::vector<double> xs(n);
  const bool geometric = lo > 0.0 && hi > 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    xs[i] = geometric ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  if (n > 1) xs.back() = hi;
  return xs;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized fractional integral evaluator", "genfrac"};
  app.require_subcommand(1, 1);

  ParamFlags pf;
  std::string f_text, x_text, format = "csv", p_text = "2", suite_name;
  double tol = EvalOptions{}.rel_tol, c = 0.0;
  std::uint64_t seed = 1;
  int cases = 50;

  auto* eval = app.add_subcommand("eval", "evaluate the operator at one or more points");
  pf.attach(eval);
  eval->add_option("--f", f_text, "function, e.g. pow:0.5")->required();
  eval->add_option("--x", x_text, "point or lo:hi:n")->required();
  eval->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  eval->add_option("--tol", tol, "relative tolerance")->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "name the classical operator a tuple reduces to");
  pf.attach(classify_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run seeded identity checks");
  verify_cmd->add_option("--suite", suite_name)
      ->required()
      ->check(CLI::IsMember({"shift", "semigroup", "product", "bounded", "reductions", "hadamard-limit", "all"}));
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--cases", cases)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* norm_cmd = app.add_subcommand("norm", "weighted L^p norm of a function on [a, b]");
  norm_cmd->add_option("--f", f_text)->required();
  norm_cmd->add_option("--a", pf.a)->required();
  norm_cmd->add_option("--b", pf.b)->required();

  auto* kconst_cmd = app.add_subcommand("kconst", "boundedness constant on [a, b]");
  pf.attach(kconst_cmd);

  for (auto* cmd : {norm_cmd, kconst_cmd}) {
    cmd->add_option("--p", p_text, "exponent >= 1 or inf")->capture_default_str();
    cmd->add_option("--c", c)->capture_default_str();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval->parsed()) {
      const OperatorParams params = pf.build();
      const FunctionSpec f = parse_function_spec(f_text);
      const std::vector<double> xs = parse_points(x_text);
      EvalOptions opt;
      opt.rel_tol = tol;
      std::vector<EvalResult> results;
      for (double x : xs) results.push_back(evaluate(params, f, x, opt));

      if (format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < xs.size(); ++i) {
          rows.push_back({{"x", xs[i]},
                          {"value", real_json(results[i].value)},
                          {"abs_err", real_json(results[i].abs_error_estimate)},
                          {"method", std::string(to_string(results[i].method))}});
        }
        json doc{{"params", params_json(params)}, {"results", rows}};
        doc["params"]["f"] = to_string(f);
        out << doc.dump(2) << '\n';
      } else {
        out << "x,value,abs_err,method\n";
        for (std::size_t i = 0; i < xs.size(); ++i) {
          out << format_real(xs[i]) << ',' << format_real(results[i].value) << ','
              << format_real(results[i].abs_error_estimate) << ','
              << csv_field(std::string(to_string(results[i].method))) << '\n';
        }
      }
      return kOk;
    }

    if (classify_cmd->parsed()) {
      const OperatorParams params = pf.build();
      const ClassicalReduction r = classify(params);
      out << to_string(r) << '\n';
      json detail{{"reduction", std::string(to_string(r))}, {"params", params_json(params)}};
      if (r != ClassicalReduction::General) detail["equivalent"] = classical_json(r, params);
      out << detail.dump() << '\n';
      return kOk;
    }

    if (verify_cmd->parsed()) {
      std::vector<Suite> suites;
      if (suite_name == "all") {
        suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
      } else {
        suites.push_back(*parse_suite(suite_name));
      }
      bool ok = true;
      json doc = json::array();
      for (Suite s : suites) {
        const SuiteSummary summary = run_suite(s, seed, cases);
        ok = ok && summary.all_passed();
        if (format == "json") {
          json rows = json::array();
          for (const CaseOutcome& o : summary.outcomes) {
            json row = report_json(o.report);
            row["case"] = o.index;
            row["description"] = o.description;
            if (!o.error.empty()) row["error"] = o.error;
            rows.push_back(std::move(row));
          }
          doc.push_back({{"suite", std::string(to_string(s))},
                         {"cases", summary.cases},
                         {"passed", summary.passed},
                         {"worst_rel_diff", real_json(summary.worst_rel_diff)},
                         {"reports", rows}});
        } else {
          out << format_summary(summary) << '\n';
          for (const CaseOutcome& o : summary.outcomes) {
            if (o.report.passed) continue;
            err << "  case " << o.index << ": " << o.description;
            if (!o.error.empty()) err << " (" << o.error << ')';
            err << '\n';
          }
        }
      }
      if (format == "json") out << doc.dump(2) << '\n';
      return ok ? kOk : kVerifyFailed;
    }

    const SpaceParams space{parse_real(p_text), c};
    if (norm_cmd->parsed()) {
      const FunctionSpec f = parse_function_spec(f_text);
      out << fixed12(xpc_norm(f, space, parse_real(pf.a), parse_real(pf.b))) << '\n';
      return kOk;
    }
    if (kconst_cmd->parsed()) {
      const OperatorParams params = pf.build();
      out << fixed12(bound_constant_K(params, space, params.domain.a, params.domain.b)) << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace genfrac::cli
