#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "symcalc/errors.hpp"
#include "symcalc/random.hpp"

using namespace symcalc;
using test::config;

namespace {

ParseError parse_error(const std::string& src, std::size_t n = 1) {
  try {
    parse_expr(src, config(n));
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << src;
  return ParseError("", 0, 0);
}

}  // namespace

TEST(Parser, ProductNode) {
  const ExprPtr e = parse_expr("theta*x1*u1", config());
  const auto* node = std::get_if<Binary>(&e->node);
  ASSERT_NE(node, nullptr);
  EXPECT_EQ(node->op, '*');
}

TEST(Parser, HbarLevels) {
  const Expansion e = expand(*parse_expr("x1^2 + 2*h^-1", config()), 1);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e.at({1, 0, 0}), test::poly("2"));
  EXPECT_EQ(e.at({0, 0, 0}), test::poly("x1^2"));
  EXPECT_EQ(test::w("h^(-2)"), test::w("h^-2"));
  EXPECT_EQ(test::w("h^-1*h"), test::w("1"));
}

TEST(Parser, Precedence) {
  EXPECT_EQ(test::w("-x1^2"), test::w("-(x1^2)"));
  EXPECT_EQ(test::w("2*x1 + 3*u1*x1 - 1"), test::w("(2*x1) + ((3*u1)*x1) - 1"));
  EXPECT_EQ(test::w("1 - x1 - u1"), test::w("(1 - x1) - u1"));
  EXPECT_EQ(test::w("(x1 + u1)^2"), test::w("x1^2 + 2*x1*u1 + u1^2"));
  EXPECT_EQ(test::w("--x1"), test::w("x1"));
}

TEST(Parser, RationalLiterals) {
  EXPECT_EQ(test::poly("1/2*x1"), test::poly("x1*1 / 2"));
  EXPECT_EQ(test::poly("6/4"), test::poly("3/2"));
}

TEST(Parser, DivisionRejected) {
  const ParseError e = parse_error("x1/u1");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 3u);
  EXPECT_NE(e.detail().find("division"), std::string::npos);
  EXPECT_NE(parse_error("2/x1").detail().find("division"), std::string::npos);
}

TEST(Parser, LocatedErrors) {
  const ParseError unknown = parse_error("x1 +\n  foo");
  EXPECT_EQ(unknown.line(), 2u);
  EXPECT_EQ(unknown.column(), 3u);
  EXPECT_NE(unknown.detail().find("unknown identifier"), std::string::npos);
  EXPECT_NE(parse_error("x2").detail().find("unknown identifier"), std::string::npos);
  EXPECT_NE(parse_error("x0", 2).detail().find("unknown identifier"), std::string::npos);
  const ParseError open = parse_error("(x1 + u1");
  EXPECT_NE(open.detail().find("unbalanced"), std::string::npos);
  EXPECT_EQ(open.column(), 9u);
  EXPECT_NE(parse_error("x1)").detail().find("unbalanced"), std::string::npos);
  EXPECT_NE(parse_error("x1^").detail().find("malformed exponent"), std::string::npos);
  EXPECT_NE(parse_error("x1^u1").detail().find("malformed exponent"), std::string::npos);
  EXPECT_NE(parse_error("x1^-2").detail().find("malformed exponent"), std::string::npos);
  EXPECT_NE(parse_error("x1^1/2").detail().find("malformed exponent"), std::string::npos);
  EXPECT_NE(parse_error("x1^99999").detail().find("malformed exponent"), std::string::npos);
  EXPECT_NE(parse_error("2 x1").detail().find("implicit"), std::string::npos);
  EXPECT_NE(parse_error("").detail().find("end of input"), std::string::npos);
  EXPECT_NE(parse_error("x1 $").detail().find("unexpected character"), std::string::npos);
  EXPECT_NE(parse_error(std::string(500, '(') + "x1" + std::string(500, ')')).detail().find("nested"),
            std::string::npos);
}

TEST(Lowering, Targets) {
  EXPECT_EQ(star(test::w("u1"), test::w("x1")), test::w("x1*u1 + h"));
  const SWSymbol s = test::sw("sinv", 3);
  EXPECT_EQ(s.coeff(0, 0), test::poly("1"));
  EXPECT_EQ(test::sw("sinv^3", 3).coeff(0, 2), test::poly("1"));
  const TWSymbol t = test::tw("t*h^-1*x1", 3);
  EXPECT_EQ(t.coeff(1, 1), test::poly("x1"));
  EXPECT_EQ(t.order(), 0);
  EXPECT_THROW(test::w("t*x1"), LoweringError);
  EXPECT_THROW(test::w("sinv"), LoweringError);
  EXPECT_THROW(test::tw("sinv", 3), LoweringError);
  EXPECT_THROW(test::sw("x1", 3), LoweringError);
  EXPECT_THROW(test::sw("t*sinv", 3), LoweringError);
  EXPECT_THROW(test::tw("h^-2", 3, 0), FiltrationViolation);
  EXPECT_EQ(test::tw("h^-2", 3).order(), 2);
  EXPECT_EQ(test::tw("t^5*x1", 3), test::tw("0", 3));
}

TEST(Render, Canonical) {
  EXPECT_EQ(render(test::w("u1*x1 + h")), "x1*u1 + h");
  EXPECT_EQ(render(test::sw("x1*u1*sinv + h*sinv", 3)), "x1*u1*sinv + h*sinv");
  EXPECT_EQ(render(test::w("0")), "0");
  EXPECT_EQ(render(test::w("-x1 + h^-1")), "h^-1 - x1");
  EXPECT_EQ(render(test::w("-1/2*theta^2*x1^2")), "-1/2*theta^2*x1^2");
  EXPECT_EQ(render(test::tw("1 + t^2*h^-2*x1", 3)), "x1*t^2*h^-2 + 1");
}

TEST(Render, RoundTripsRandomValues) {
  RandomSymbols rng(123);
  const ParamScalar theta = ParamScalar::parameter("theta") + Rational(1, 3);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 3;
    const ExprConfig cfg = config(n);
    WSymbol p = rng.w_symbol(n, -3, 3, 3);
    if (i % 2) p *= theta;
    EXPECT_EQ(lower_w(*parse_expr(render(p), cfg), n), p);
    const SWSymbol s = rng.sw_symbol(n, 4, -2, 2, 2);
    EXPECT_EQ(lower_sw(*parse_expr(render(s), cfg), n, 4), s);
    const TWSymbol f = rng.tw_symbol(n, 4, rng.uniform(-2, 2), 2, 2);
    const TWSymbol back = lower_tw(*parse_expr(render(f), cfg), n, 4, f.order());
    EXPECT_EQ(back, f);
  }
}

// Every input either parses or raises a located ParseError.
TEST(Parser, FuzzTotality) {
  const std::string alphabet = "x1u2th^-+*/()sinv 0123456789\n_$";
  std::mt19937_64 gen(5);
  for (int i = 0; i < 20000; ++i) {
    std::string src;
    const auto len = gen() % 24;
    for (std::size_t k = 0; k < len; ++k) src += alphabet[gen() % alphabet.size()];
    try {
      const ExprPtr e = parse_expr(src, config(2));
      try {
        expand(*e, 2);
      } catch (const std::exception& ex) {
        ADD_FAILURE() << "expand threw on \"" << src << "\": " << ex.what();
      }
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1u);
      EXPECT_GE(e.column(), 1u);
    } catch (const std::exception& ex) {
      ADD_FAILURE() << "unexpected exception on \"" << src << "\": " << ex.what();
    }
  }
}

TEST(Parser, LeadingZerosAreDecimal) {
  EXPECT_EQ(test::poly("08*x1"), test::poly("8*x1"));
  EXPECT_EQ(test::poly("010/07"), test::poly("10/7"));
  EXPECT_EQ(test::w("h^09"), test::w("h^9"));
}
