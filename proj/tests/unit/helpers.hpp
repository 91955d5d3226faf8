#pragma once

#include "symcalc/expr.hpp"

namespace symcalc::test {

inline ExprConfig config(std::size_t n = 1, std::vector<std::string> params = {"theta"}) {
  return {n, std::move(params)};
}

inline WSymbol w(const std::string& src, std::size_t n = 1) {
  return lower_w(*parse_expr(src, config(n)), n);
}

inline SWSymbol sw(const std::string& src, unsigned depth, std::size_t n = 1) {
  return lower_sw(*parse_expr(src, config(n)), n, depth);
}

inline TWSymbol tw(const std::string& src, unsigned max_degree, std::optional<int> order = std::nullopt,
                   std::size_t n = 1) {
  return lower_tw(*parse_expr(src, config(n)), n, max_degree, order);
}

inline XUPoly poly(const std::string& src, std::size_t n = 1) { return w(src, n).coeff(0); }

inline ParamScalar theta() { return ParamScalar::parameter("theta"); }

}  // namespace symcalc::test
