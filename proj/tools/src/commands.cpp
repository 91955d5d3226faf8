#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "symcalc/errors.hpp"
#include "symcalc/expr.hpp"
#include "symcalc/gevrey.hpp"
#include "symcalc/laws.hpp"
#include "symcalc/star_exp.hpp"

namespace symcalc::cli {

namespace {

struct Options {
  std::size_t n = 1;
  std::vector<std::string> params;
  std::optional<int> hbar_min;
  unsigned max_degree = 4;
  std::optional<unsigned> s_depth;
  std::string format = "human";

  std::string target = "w";
  std::vector<std::string> inputs;
  std::string routes = "series";
  std::string theta = "theta";
  std::optional<int> max_key;
  std::string suite;
  std::uint64_t seed = 7;
  unsigned sizes = 20;
  std::string demo;
  std::string sequence = "squared-factorial";
  unsigned depth = 8;
  std::string file;

  bool json() const { return format == "json"; }
  unsigned ns() const { return s_depth.value_or(max_degree); }
  ExprConfig config() const { return {n, params}; }
};

std::string describe(const PrecisionWindow& w, unsigned max_degree) {
  if (w.is_full(max_degree)) return "exact through t^" + std::to_string(max_degree) + " at every level";
  std::ostringstream s;
  if (w.cap() < 0) return "nothing exact";
  s << "exact through t^" << w.cap();
  if (w.floor()) s << " for levels j >= " << *w.floor();
  if (!w.overrides().empty()) {
    s << ", except";
    bool first = true;
    for (const auto& [level, t] : w.overrides()) {
      s << (first ? " " : ", ") << "j = " << level << ": t^" << t;
      first = false;
    }
  }
  return s.str();
}

std::string describe_floor(std::optional<int> floor) {
  return floor ? "exact for levels j >= " + std::to_string(*floor) : "exact";
}

WSymbol input_w(const Options& o, const std::string& src) {
  WSymbol p = lower_w(*parse_expr(src, o.config()), o.n);
  return o.hbar_min ? p.truncated(*o.hbar_min) : p;
}

SWSymbol input_sw(const Options& o, const std::string& src) {
  SWSymbol p = lower_sw(*parse_expr(src, o.config()), o.n, o.ns());
  return o.hbar_min ? p.truncated(*o.hbar_min) : p;
}

TWSymbol input_tw(const Options& o, const std::string& src) {
  TWSymbol f = lower_tw(*parse_expr(src, o.config()), o.n, o.max_degree);
  if (!o.hbar_min) return f;
  return TWSymbol(f.n(), f.max_degree(), f.order(), f.coeffs(),
                  PrecisionWindow(o.hbar_min, static_cast<int>(o.max_degree)));
}

int cmd_star(const Options& o, std::ostream& out) {
  const std::string& a = o.inputs.at(0);
  const std::string& b = o.inputs.at(1);
  if (o.target == "w") {
    const WSymbol r = star(input_w(o, a), input_w(o, b));
    if (o.json())
      out << Json{{"schema", kSchemaVersion}, {"command", "star"}, {"result", to_json(r)}}.dump(2) << "\n";
    else
      out << render(r) << "\nwindow: " << describe_floor(r.floor()) << "\n";
  } else if (o.target == "sw") {
    const SWSymbol r = star(input_sw(o, a), input_sw(o, b));
    if (o.json())
      out << Json{{"schema", kSchemaVersion}, {"command", "star"}, {"result", to_json(r)}}.dump(2) << "\n";
    else
      out << render(r) << "\nwindow: " << describe_floor(r.floor()) << " through sinv^" << r.depth() + 1 << "\n";
  } else {
    const TWSymbol r = star(input_tw(o, a), input_tw(o, b));
    if (o.json())
      out << Json{{"schema", kSchemaVersion}, {"command", "star"}, {"result", to_json(r)}}.dump(2) << "\n";
    else
      out << render(r) << "\norder: " << r.order() << "\nwindow: " << describe(r.window(), r.max_degree()) << "\n";
  }
  return kOk;
}

std::vector<std::string> route_list(const std::string& spec) {
  if (spec == "all") return {"series", "ode", "resolvent"};
  std::vector<std::string> names;
  std::stringstream s(spec);
  for (std::string item; std::getline(s, item, ',');) {
    if (item != "series" && item != "ode" && item != "resolvent")
      throw CLI::ValidationError("--routes", "unknown route \"" + item + "\"");
    names.push_back(item);
  }
  if (names.empty()) throw CLI::ValidationError("--routes", "no route given");
  return names;
}

int cmd_starexp(const Options& o, std::ostream& out) {
  const std::vector<std::string> names = route_list(o.routes);
  const WSymbol p = input_w(o, o.inputs.at(0));
  std::vector<std::pair<std::string, TWSymbol>> results;
  for (const auto& name : names) {
    if (name == "series") results.emplace_back(name, starexp_series(p, o.max_degree));
    if (name == "ode") results.emplace_back(name, starexp_ode(p, o.max_degree));
    if (name == "resolvent") results.emplace_back(name, starexp_via_resolvent(p, o.max_degree));
  }
  bool agree = true;
  for (std::size_t i = 1; i < results.size(); ++i)
    agree = agree && results[0].second.agrees_with(results[i].second);

  if (o.json()) {
    Json routes = Json::object();
    for (const auto& [name, f] : results) routes[name] = to_json(f);
    Json j{{"schema", kSchemaVersion}, {"command", "starexp"}, {"D", o.max_degree}, {"routes", routes}};
    j["agree"] = results.size() > 1 ? Json(agree) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else if (results.size() == 1) {
    out << render(results[0].second) << "\n";
    if (!results[0].second.window().is_full(o.max_degree))
      out << "window: " << describe(results[0].second.window(), o.max_degree) << "\n";
  } else {
    for (const auto& [name, f] : results) out << name << ": " << render(f) << "\n";
    out << "agree: " << (agree ? "true" : "false") << "\n";
  }
  return agree ? kOk : kLawViolation;
}

ParamScalar theta_value(Options o) {
  const std::string& spec = o.theta;
  const bool identifier = !spec.empty() && (std::isalpha(static_cast<unsigned char>(spec[0])) || spec[0] == '_');
  if (identifier && std::find(o.params.begin(), o.params.end(), spec) == o.params.end())
    o.params.push_back(spec);
  const WSymbol w = lower_w(*parse_expr(spec, o.config()), 1);
  if (w.is_zero()) return ParamScalar();
  const XUPoly c = w.coeff(0);
  if (w.coeffs().size() != 1 || c.size() != 1 || !c.terms().begin()->first.is_one())
    throw LoweringError("theta must be a scalar built from numbers and parameters");
  return c.terms().begin()->second;
}

int cmd_oscillator(const Options& o, std::ostream& out) {
  const ParamScalar theta = theta_value(o);
  const unsigned d = o.max_degree;
  const int max_key = o.max_key.value_or(static_cast<int>(d));
  const WSymbol p = oscillator_hamiltonian(theta);
  const TWSymbol closed = oscillator_closed_form(theta, d);
  const ExpRoutes routes = starexp_all_routes(p, d);
  const FpiRecord fpi = fpi_oscillator(theta, d, max_key);
  const bool series_ok = routes.series == closed;
  const bool ode_ok = routes.ode == closed;
  const bool resolvent_ok = routes.via_resolvent == closed;
  const bool all = series_ok && ode_ok && resolvent_ok && fpi.verified;

  if (o.json()) {
    Json j{{"schema", kSchemaVersion}, {"command", "oscillator"}, {"D", d}, {"max_key", max_key},
           {"hamiltonian", to_json(p)}, {"closed_form", to_json(closed)}, {"starexp", to_json(routes.series)},
           {"verdicts", {{"series", series_ok}, {"ode", ode_ok}, {"resolvent", resolvent_ok}, {"fpi", fpi.verified}}},
           {"pass", all}};
    out << j.dump(2) << "\n";
  } else {
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "P = " << render(p) << ", D = " << d << "\n"
        << "starexp = " << render(routes.series) << "\n"
        << "series == closed form: " << b(series_ok) << "\n"
        << "ode == closed form: " << b(ode_ok) << "\n"
        << "resolvent == closed form: " << b(resolvent_ok) << "\n"
        << "fpi identity (j <= " << max_key << ", d <= " << d << "): " << b(fpi.verified) << "\n";
  }
  return all ? kOk : kLawViolation;
}

FormalSequence sequence_from(const std::string& name) {
  for (auto seq : {FormalSequence::SquaredFactorial, FormalSequence::Factorial, FormalSequence::One})
    if (to_string(seq) == name) return seq;
  throw CLI::ValidationError("--sequence", "unknown sequence \"" + name + "\"");
}

int cmd_demo(const Options& o, std::ostream& out) {
  const FormalDemoReport r = formal_counterexample_demo(sequence_from(o.sequence), o.depth);
  if (o.json()) {
    Json coeffs = Json::array();
    for (const auto& c : r.t_coeffs) coeffs.push_back(c.get_str());
    Json roots = Json::array();
    for (const auto& iv : r.roots) roots.push_back({{"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}});
    out << Json{{"schema", kSchemaVersion}, {"command", "check"}, {"demo", "formal-counterexample"},
                {"sequence", to_string(r.sequence)}, {"depth", r.depth}, {"t_coeffs", coeffs},
                {"roots", roots}, {"threshold", r.threshold.get_str()},
                {"verdict", r.divergent ? "divergent" : "convergent"}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "formal-case demo: sequence " << to_string(r.sequence) << ", depth " << r.depth << "\n";
  out << "t-coefficients:";
  for (const auto& c : r.t_coeffs) out << " " << c.get_str();
  out << "\nroot test |a_n|^(1/n):";
  for (const auto& iv : r.roots) out << " " << iv.lo.get_d();
  out << "\nthreshold: " << r.threshold.get_str() << "\n";
  out << "verdict: " << (r.divergent ? "divergent" : "convergent") << "\n";
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (!o.demo.empty()) {
    if (o.suite != "gevrey") throw CLI::ValidationError("--demo", "demos belong to the gevrey suite");
    return cmd_demo(o, out);
  }
  SuiteReport report;
  if (o.suite == "laws") report = run_law_suite(o.seed, o.sizes);
  if (o.suite == "laplace") report = run_laplace_suite(o.seed, o.sizes);
  if (o.suite == "gevrey") report = run_gevrey_suite(o.seed, o.sizes);
  if (o.json()) {
    Json j = to_json(report);
    if (o.suite == "gevrey") j["norm"] = kNormDescription;
    out << j.dump(2) << "\n";
  } else {
    out << "suite " << report.suite << " (seed " << report.seed << ")\n";
    if (o.suite == "gevrey") out << "norm: " << kNormDescription << "\n";
    for (const auto& law : report.laws) {
      out << "  " << (law.ok() ? "PASS" : "FAIL") << " " << law.name << " (" << law.passed << "/" << law.cases << ")";
      if (!law.message.empty()) out << ": " << law.message;
      out << "\n";
    }
    out << "result: " << (report.ok() ? "pass" : "fail") << "\n";
  }
  return report.ok() ? kOk : kLawViolation;
}

int cmd_show(const Options& o, std::ostream& out) {
  Json j;
  try {
    if (o.file == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(o.file);
      if (!in) throw SchemaError("cannot open " + o.file);
      j = Json::parse(in);
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(e.what());
  }
  if (j.contains("result")) j = j.at("result");
  const std::string type = j.is_object() && j.contains("type") ? j.at("type").get<std::string>() : "";
  if (type == "w") {
    const WSymbol p = w_from_json(j);
    out << (o.json() ? to_json(p).dump(2) : render(p)) << "\n";
  } else if (type == "sw") {
    const SWSymbol p = sw_from_json(j);
    out << (o.json() ? to_json(p).dump(2) : render(p)) << "\n";
  } else if (type == "tw") {
    const TWSymbol p = tw_from_json(j);
    out << (o.json() ? to_json(p).dump(2) : render(p)) << "\n";
  } else {
    throw SchemaError("input is not a serialized symbol");
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symbol calculus for the algebras W, SW and TW"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with the same fields as the flags");

  Options o;
  app.add_option("--n", o.n, "Phase-space half-dimension")->check(CLI::Range(1, 16));
  app.add_option("--param", o.params, "Declared parameter name (repeatable)");
  app.add_option("--hbar-min", o.hbar_min, "Forget hbar-levels below this key in the inputs");
  app.add_option("--D", o.max_degree, "t-degree truncation");
  app.add_option("--Ns", o.s_depth, "s-depth truncation (default: D)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));

  auto* star_cmd = app.add_subcommand("star", "Star product of two expressions");
  star_cmd->add_option("--target", o.target, "Algebra")->check(CLI::IsMember({"w", "sw", "tw"}));
  star_cmd->add_option("inputs", o.inputs, "Two expressions")->required()->expected(2);

  auto* exp_cmd = app.add_subcommand("starexp", "Star-exponential exp(t hbar^-1 P)");
  exp_cmd->add_option("P", o.inputs, "Order <= 0 expression")->required()->expected(1);
  exp_cmd->add_option("--routes", o.routes, "all, or a comma list of series,ode,resolvent");

  auto* osc_cmd = app.add_subcommand("oscillator", "Oscillator star-exponential against its closed form");
  osc_cmd->add_option("--theta", o.theta, "Parameter name or rational");
  osc_cmd->add_option("--max-key", o.max_key, "hbar^-1 power bound for the FPI series (default: D)");

  auto* check_cmd = app.add_subcommand("check", "Run a law suite");
  check_cmd->add_option("suite", o.suite)->required()->check(CLI::IsMember({"laws", "gevrey", "laplace"}));
  check_cmd->add_option("--seed", o.seed, "Random seed");
  check_cmd->add_option("--sizes", o.sizes, "Cases per randomized law")->check(CLI::Range(1u, 100000u));
  check_cmd->add_option("--demo", o.demo)->check(CLI::IsMember({"formal-counterexample"}));
  check_cmd->add_option("--sequence", o.sequence, "squared-factorial, factorial or one");
  check_cmd->add_option("--depth", o.depth, "Window depth of the demo")->check(CLI::Range(1u, 200u));

  auto* show_cmd = app.add_subcommand("show", "Read a serialized symbol and print it");
  show_cmd->add_option("file", o.file, "JSON file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*star_cmd) return cmd_star(o, out);
    if (*exp_cmd) return cmd_starexp(o, out);
    if (*osc_cmd) return cmd_oscillator(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*show_cmd) return cmd_show(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const LoweringError& e) {
    err << "lowering error: " << e.what() << "\n";
    return kParseError;
  } catch (const SchemaError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionError;
  }
  return kOk;
}

}  // namespace symcalc::cli
