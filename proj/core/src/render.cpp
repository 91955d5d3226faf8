#include <string>
#include <vector>

#include "symcalc/expr.hpp"

namespace symcalc {

namespace {

struct Term {
  Rational coeff;
  std::vector<std::string> factors;
};

std::string pow_factor(const std::string& base, long exponent) {
  if (exponent == 1) return base;
  if (exponent < 0) return base + "^(" + std::to_string(exponent) + ")";
  return base + "^" + std::to_string(exponent);
}

void collect(const XUPoly& p, const std::vector<std::string>& suffix, std::vector<Term>& out) {
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Monomial& m = it->first;
    std::vector<std::string> mono;
    for (std::size_t i = 0; i < m.n(); ++i)
      if (m.x(i) > 0) mono.push_back(pow_factor("x" + std::to_string(i + 1), m.x(i)));
    for (std::size_t i = 0; i < m.n(); ++i)
      if (m.u(i) > 0) mono.push_back(pow_factor("u" + std::to_string(i + 1), m.u(i)));
    for (const auto& [pm, value] : it->second.terms()) {
      Term t{value, {}};
      for (const auto& [name, e] : pm.factors()) t.factors.push_back(pow_factor(name, e));
      t.factors.insert(t.factors.end(), mono.begin(), mono.end());
      t.factors.insert(t.factors.end(), suffix.begin(), suffix.end());
      out.push_back(std::move(t));
    }
  }
}

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : terms) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    std::string body;
    if (mag != 1 || t.factors.empty()) body = mag.get_str();
    for (const auto& f : t.factors) {
      if (!body.empty()) body += "*";
      body += f;
    }
    s += body;
  }
  return s;
}

std::string hbar_factor(int key) {
  if (key == -1) return "h";
  if (key < 0) return "h^" + std::to_string(-key);
  return "h^-" + std::to_string(key);
}

void push_hbar(std::vector<std::string>& f, int key) {
  if (key != 0) f.push_back(hbar_factor(key));
}

}  // namespace

std::string render(const ParamScalar& c) { return render(XUPoly(1, c)); }

std::string render(const XUPoly& p) {
  std::vector<Term> terms;
  collect(p, {}, terms);
  return join(terms);
}

std::string render(const WSymbol& p) {
  std::vector<Term> terms;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    std::vector<std::string> suffix;
    push_hbar(suffix, it->first);
    collect(it->second, suffix, terms);
  }
  return join(terms);
}

std::string render(const SWSymbol& p) {
  std::vector<Term> terms;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    for (const auto& [k, c] : it->second.coeffs()) {
      std::vector<std::string> suffix;
      push_hbar(suffix, it->first);
      suffix.push_back(pow_factor("sinv", static_cast<long>(k) + 1));
      collect(c, suffix, terms);
    }
  return join(terms);
}

std::string render(const TWSymbol& p) {
  std::vector<Term> terms;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    for (const auto& [d, c] : it->second.coeffs()) {
      std::vector<std::string> suffix;
      if (d > 0) suffix.push_back(pow_factor("t", d));
      push_hbar(suffix, it->first);
      collect(c, suffix, terms);
    }
  return join(terms);
}

}  // namespace symcalc
