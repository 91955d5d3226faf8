#include "json_io.hpp"

#include <string>

namespace symcalc::cli {

namespace {

Json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

// One JSON term per (monomial, parameter monomial) pair.
void append_terms(Json& terms, const XUPoly& p, const Json& position) {
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (std::size_t i = 0; i < m.n(); ++i) {
      if (m.x(i) > 0) mono["x" + std::to_string(i + 1)] = m.x(i);
      if (m.u(i) > 0) mono["u" + std::to_string(i + 1)] = m.u(i);
    }
    for (const auto& [pm, value] : c.terms()) {
      Json coeff = rational_json(value);
      Json params = Json::object();
      for (const auto& [name, e] : pm.factors()) params[name] = e;
      coeff["params"] = params;
      Json term = position;
      term["monomial"] = mono;
      term["coeff"] = coeff;
      terms.push_back(std::move(term));
    }
  }
}

Json header(const char* type, std::size_t n) {
  return {{"schema", kSchemaVersion}, {"type", type}, {"n", n}, {"terms", Json::array()}};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("field \"") + key + "\": " + e.what());
  }
}

std::optional<int> optional_int(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get<int>(j, key);
}

void check_header(const Json& j, const std::string& type) {
  if (get<int>(j, "schema") != kSchemaVersion) throw SchemaError("unsupported schema version");
  if (get<std::string>(j, "type") != type)
    throw SchemaError("expected a symbol of type \"" + type + "\"");
}

Rational parse_rational(const Json& coeff) {
  try {
    const Integer den(get<std::string>(coeff, "den"), 10);
    if (den == 0) throw SchemaError("zero denominator");
    Rational q(Integer(get<std::string>(coeff, "num"), 10), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw SchemaError("coefficient is not a decimal integer pair");
  }
}

XUPoly term_poly(const Json& term, std::size_t n) {
  Monomial m(n);
  for (const auto& [name, e] : field(term, "monomial").items()) {
    std::size_t index = 0;
    if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'u'))
      index = static_cast<std::size_t>(std::atoi(name.c_str() + 1));
    if (index < 1 || index > n) throw SchemaError("bad monomial variable \"" + name + "\"");
    const auto exponent = e.get<unsigned>();
    if (name[0] == 'x')
      m.x(index - 1) = exponent;
    else
      m.u(index - 1) = exponent;
  }
  const Json& coeff = field(term, "coeff");
  ParamMonomial pm;
  if (coeff.contains("params"))
    for (const auto& [name, e] : coeff.at("params").items()) pm = pm * ParamMonomial::of(name, e.get<unsigned>());
  return XUPoly::monomial(m, ParamScalar::term(pm, parse_rational(coeff)));
}

}  // namespace

Json to_json(const WSymbol& p) {
  Json j = header("w", p.n());
  j["order"] = p.is_zero() ? Json(nullptr) : Json(p.order());
  if (p.floor()) j["floor"] = *p.floor();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    append_terms(j["terms"], it->second, {{"hbar", it->first}});
  return j;
}

Json to_json(const SWSymbol& p) {
  Json j = header("sw", p.n());
  j["order"] = p.is_zero() ? Json(nullptr) : Json(p.order());
  j["Ns"] = p.depth();
  if (p.floor()) j["floor"] = *p.floor();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    for (const auto& [k, c] : it->second.coeffs())
      append_terms(j["terms"], c, {{"hbar", it->first}, {"sdepth", k}});
  return j;
}

Json to_json(const PrecisionWindow& w) {
  Json j{{"floor", w.floor() ? Json(*w.floor()) : Json(nullptr)}, {"cap", w.cap()}};
  Json overrides = Json::array();
  for (const auto& [level, t] : w.overrides()) overrides.push_back({level, t});
  j["overrides"] = overrides;
  return j;
}

Json to_json(const TWSymbol& f) {
  Json j = header("tw", f.n());
  j["order"] = f.order();
  j["D"] = f.max_degree();
  j["window"] = to_json(f.window());
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    for (const auto& [d, c] : it->second.coeffs())
      append_terms(j["terms"], c, {{"hbar", it->first}, {"t", d}});
  return j;
}

Json to_json(const LawResult& law) {
  return {{"name", law.name}, {"cases", law.cases}, {"passed", law.passed},
          {"pass", law.ok()}, {"message", law.message}};
}

Json to_json(const SuiteReport& report) {
  Json laws = Json::array();
  for (const auto& law : report.laws) laws.push_back(to_json(law));
  return {{"schema", kSchemaVersion}, {"suite", report.suite}, {"seed", report.seed},
          {"pass", report.ok()}, {"laws", laws}};
}

WSymbol w_from_json(const Json& j) {
  check_header(j, "w");
  const auto n = get<std::size_t>(j, "n");
  WSymbol p(n, {}, optional_int(j, "floor"));
  for (const Json& term : field(j, "terms")) p.add_coeff(get<int>(term, "hbar"), term_poly(term, n));
  return p;
}

SWSymbol sw_from_json(const Json& j) {
  check_header(j, "sw");
  const auto n = get<std::size_t>(j, "n");
  SWSymbol p(n, get<unsigned>(j, "Ns"), {}, optional_int(j, "floor"));
  for (const Json& term : field(j, "terms"))
    p.add_term(get<int>(term, "hbar"), get<unsigned>(term, "sdepth"), term_poly(term, n));
  return p;
}

PrecisionWindow window_from_json(const Json& j) {
  std::map<int, int> overrides;
  for (const Json& o : field(j, "overrides")) {
    if (!o.is_array() || o.size() != 2) throw SchemaError("window override must be [level, t]");
    overrides[o[0].get<int>()] = o[1].get<int>();
  }
  try {
    return PrecisionWindow(optional_int(j, "floor"), get<int>(j, "cap"), std::move(overrides));
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  }
}

TWSymbol tw_from_json(const Json& j) {
  check_header(j, "tw");
  const auto n = get<std::size_t>(j, "n");
  TWSymbol f(n, get<unsigned>(j, "D"), get<int>(j, "order"), {}, window_from_json(field(j, "window")));
  for (const Json& term : field(j, "terms"))
    f.add_term(get<int>(term, "hbar"), get<unsigned>(term, "t"), term_poly(term, n));
  return f;
}

}  // namespace symcalc::cli
