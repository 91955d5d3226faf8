#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symcalc/rational.hpp"

namespace symcalc {

/// A monomial in formal parameters, e.g. theta^2*kappa. Stored as
/// (name, exponent) pairs sorted by name with strictly positive exponents.
class ParamMonomial {
 public:
  ParamMonomial() = default;
  static ParamMonomial of(const std::string& name, unsigned exponent = 1);

  ParamMonomial operator*(const ParamMonomial& other) const;

  bool is_one() const noexcept { return factors_.empty(); }
  unsigned degree() const noexcept;
  const std::vector<std::pair<std::string, unsigned>>& factors() const noexcept {
    return factors_;
  }

  auto operator<=>(const ParamMonomial&) const = default;

 private:
  std::vector<std::pair<std::string, unsigned>> factors_;
};

/// Parameter assignment used when a scalar has to become a plain rational.
using ParamAssignment = std::map<std::string, Rational>;

/// Exact rational linear combination of parameter monomials. This is the
/// coefficient ring of every polynomial in the library; parameters are
/// never inverted.
class ParamScalar {
 public:
  using Terms = std::map<ParamMonomial, Rational>;

  ParamScalar() = default;
  ParamScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  ParamScalar(long value) : ParamScalar(Rational(value)) {}  // NOLINT
  ParamScalar(int value) : ParamScalar(Rational(value)) {}   // NOLINT

  static ParamScalar parameter(const std::string& name, unsigned exponent = 1);
  static ParamScalar term(const ParamMonomial& monomial, const Rational& value);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of the parameter-free part.
  Rational constant_term() const;
  const Terms& terms() const noexcept { return terms_; }

  ParamScalar& operator+=(const ParamScalar& other);
  ParamScalar& operator-=(const ParamScalar& other);
  ParamScalar& operator*=(const ParamScalar& other);
  ParamScalar operator-() const;

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    ParamScalar r = a;
    return r *= b;
  }

  /// Substitutes every parameter; throws UnassignedParameter if one is missing.
  Rational evaluate(const ParamAssignment& values) const;

  bool operator==(const ParamScalar& other) const;
  bool operator<(const ParamScalar& other) const { return terms_ < other.terms_; }

 private:
  void add_term(const ParamMonomial& monomial, const Rational& value);

  Terms terms_;
};

}  // namespace symcalc
