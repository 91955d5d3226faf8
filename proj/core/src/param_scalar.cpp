#include "symcalc/param_scalar.hpp"

#include "symcalc/errors.hpp"

namespace symcalc {

ParamMonomial ParamMonomial::of(const std::string& name, unsigned exponent) {
  ParamMonomial m;
  if (exponent > 0) m.factors_.emplace_back(name, exponent);
  return m;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& other) const {
  ParamMonomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, other.factors_.end());
  return r;
}

unsigned ParamMonomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& [name, e] : factors_) d += e;
  return d;
}

ParamScalar::ParamScalar(const Rational& value) {
  if (value != 0) terms_.emplace(ParamMonomial{}, value);
}

ParamScalar ParamScalar::parameter(const std::string& name, unsigned exponent) {
  return term(ParamMonomial::of(name, exponent), Rational(1));
}

ParamScalar ParamScalar::term(const ParamMonomial& monomial, const Rational& value) {
  ParamScalar s;
  s.add_term(monomial, value);
  return s;
}

bool ParamScalar::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamScalar::constant_term() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void ParamScalar::add_term(const ParamMonomial& monomial, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& other) {
  if (is_zero()) return *this;
  if (other.is_constant()) {
    if (other.is_zero()) {
      terms_.clear();
      return *this;
    }
    const Rational c = other.terms_.begin()->second;
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  ParamScalar r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  *this = std::move(r);
  return *this;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Rational ParamScalar::evaluate(const ParamAssignment& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) throw UnassignedParameter("parameter '" + name + "' has no value");
      v *= power(it->second, e);
    }
    total += v;
  }
  return total;
}

bool ParamScalar::operator==(const ParamScalar& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

}  // namespace symcalc
