#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "symcalc/sw_symbol.hpp"
#include "symcalc/tw_symbol.hpp"
#include "symcalc/w_symbol.hpp"

namespace symcalc {

/// Phase-space size and declared parameter names for one session.
struct ExprConfig {
  std::size_t n = 1;
  std::vector<std::string> parameters;
};

struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class VarKind { X, U, T, SInv, Hbar, Param };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NumberLit {
  Rational value;
};
struct Variable {
  VarKind kind;
  std::size_t index = 0;  // 0-based for x_i / u_i
  std::string name;       // parameter name
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // '+', '-', '*'
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Power {
  ExprPtr base;
  int exponent;  // negative only when base is h
};

struct Expr {
  std::variant<NumberLit, Variable, Negate, Binary, Power> node;
  SourceLocation loc;
};

/// Parses one expression. Grammar (EBNF):
///
///   expr     = term { ("+" | "-") term } ;
///   term     = unary { "*" unary } ;
///   unary    = "-" unary | power ;
///   power    = primary [ "^" exponent ] ;
///   exponent = integer | "-" integer | "(" [ "-" ] integer ")" ;
///   primary  = number | identifier | "(" expr ")" ;
///   number   = integer [ "/" integer ] ;
///
/// Identifiers: x1..xn, u1..un, t, sinv (s^-1), h (hbar) and the declared
/// parameters. Negative exponents are accepted on h only. Throws ParseError.
ExprPtr parse_expr(std::string_view src, const ExprConfig& config);

/// Fully distributed expression: (hbar key, t-power, sinv-power) -> XUPoly.
using Expansion = std::map<std::tuple<int, unsigned, unsigned>, XUPoly>;
Expansion expand(const Expr& e, std::size_t n);

/// Lowering into core types; throws LoweringError on atoms the target
/// cannot represent.
WSymbol lower_w(const Expr& e, std::size_t n);
/// Every term needs a sinv factor: sinv^{k+1} becomes s-depth k.
SWSymbol lower_sw(const Expr& e, std::size_t n, unsigned depth);
/// Without an explicit order the least order satisfying the filtration
/// invariant is declared; an explicit order that is too small throws
/// FiltrationViolation. Terms above t-degree D are dropped.
TWSymbol lower_tw(const Expr& e, std::size_t n, unsigned max_degree,
                  std::optional<int> order = std::nullopt);

/// Canonical ASCII rendering accepted by parse_expr. Levels print in
/// decreasing order (leading term first).
std::string render(const ParamScalar& c);
std::string render(const XUPoly& p);
std::string render(const WSymbol& p);
std::string render(const SWSymbol& p);
std::string render(const TWSymbol& p);

}  // namespace symcalc
