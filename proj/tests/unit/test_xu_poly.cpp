#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symcalc/errors.hpp"
#include "symcalc/random.hpp"
#include "symcalc/rational_matrix.hpp"

using namespace symcalc;
using test::poly;

TEST(XUPoly, ArithmeticExamples) {
  EXPECT_EQ(poly("x1 + u1") + poly("x1 - u1"), poly("2*x1"));
  EXPECT_EQ(poly("x1*u1") * poly("x1*u1"), poly("x1^2*u1^2"));
  EXPECT_EQ(poly("theta*x1") * poly("theta*u1"), poly("theta^2*x1*u1"));
  EXPECT_TRUE((poly("x1*u1") - poly("u1*x1")).is_zero());
}

TEST(XUPoly, Degrees) {
  const XUPoly p = poly("x1^3*u2 + u1^2", 2);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.degree_x(0), 3u);
  EXPECT_EQ(p.degree_u(0), 2u);
  EXPECT_EQ(p.degree_u(1), 1u);
  EXPECT_EQ(XUPoly(2).degree(), -1);
}

TEST(XUPoly, DeriveExamples) {
  const unsigned two[] = {2};
  const unsigned one[] = {1};
  const unsigned zero[] = {0};
  EXPECT_EQ(poly("x1*u1^2").derive(two, zero), poly("2*x1"));
  EXPECT_EQ(poly("x1*u1").derive(one, one), poly("1"));
  EXPECT_TRUE(poly("x1^2").derive(one, zero).is_zero());
}

TEST(XUPoly, DimensionMismatch) {
  EXPECT_THROW(poly("x1") + poly("x1", 2), DimensionMismatch);
  EXPECT_THROW(poly("x1") * poly("x1", 2), DimensionMismatch);
}

TEST(XUPoly, AffineExamples) {
  const RationalMatrix two{{Rational(2)}};
  EXPECT_EQ(poly("x1*u1").affine_substitute(two), poly("x1*u1"));
  EXPECT_EQ(poly("u1").affine_substitute(two), poly("1/2*u1"));
  const RationalMatrix swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  EXPECT_EQ(poly("x1", 2).affine_substitute(swap), poly("x2", 2));
  EXPECT_EQ(poly("u1", 2).affine_substitute(swap), poly("u2", 2));
  EXPECT_THROW(poly("x1").affine_substitute(RationalMatrix(1)), SingularMatrix);
}

TEST(XUPoly, AffineIsAnAction) {
  RandomSymbols rng(11);
  for (int i = 0; i < 30; ++i) {
    const XUPoly p = rng.poly(2, 3, 4);
    const RationalMatrix a = rng.invertible_matrix(2);
    const RationalMatrix b = rng.invertible_matrix(2);
    EXPECT_EQ(p.affine_substitute(a).affine_substitute(a.inverse()), p);
    // Pullbacks compose contravariantly: (p o A) o B = p o (A B).
    EXPECT_EQ(p.affine_substitute(a).affine_substitute(b), p.affine_substitute(a * b));
  }
}

TEST(XUPoly, AffinePreservesPairing) {
  RandomSymbols rng(12);
  for (int i = 0; i < 10; ++i) {
    const RationalMatrix a = rng.invertible_matrix(2);
    EXPECT_EQ(poly("x1*u1 + x2*u2", 2).affine_substitute(a), poly("x1*u1 + x2*u2", 2));
  }
}

TEST(XUPoly, EvaluateParams) {
  EXPECT_EQ(poly("theta*x1 + theta^2").evaluate_params({{"theta", Rational(3)}}), poly("3*x1 + 9"));
}
