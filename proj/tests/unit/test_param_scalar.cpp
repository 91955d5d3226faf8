#include <gtest/gtest.h>

#include "symcalc/errors.hpp"
#include "symcalc/param_scalar.hpp"

using namespace symcalc;

TEST(ParamScalar, ZeroIsCanonical) {
  const ParamScalar theta = ParamScalar::parameter("theta");
  EXPECT_TRUE((theta - theta).is_zero());
  EXPECT_EQ(theta - theta, ParamScalar());
  EXPECT_TRUE(ParamScalar(0).is_zero());
}

TEST(ParamScalar, ProductOfParameters) {
  const ParamScalar a = ParamScalar::parameter("a");
  const ParamScalar b = ParamScalar::parameter("b");
  const ParamScalar p = (a + 1) * (a - 1);
  EXPECT_EQ(p, ParamScalar::parameter("a", 2) - 1);
  EXPECT_EQ(a * b, b * a);
  EXPECT_FALSE(p.is_constant());
  EXPECT_EQ(p.constant_term(), Rational(-1));
}

TEST(ParamScalar, Evaluate) {
  const ParamScalar p = ParamScalar::parameter("theta", 2) * Rational(1, 2) + 3;
  EXPECT_EQ(p.evaluate({{"theta", Rational(2)}}), Rational(5));
  EXPECT_THROW(p.evaluate({}), UnassignedParameter);
  EXPECT_EQ(ParamScalar(Rational(7, 3)).evaluate({}), Rational(7, 3));
}

TEST(ParamMonomial, DegreeAndOrder) {
  const ParamMonomial m = ParamMonomial::of("b") * ParamMonomial::of("a", 2) * ParamMonomial::of("b");
  EXPECT_EQ(m.degree(), 4u);
  ASSERT_EQ(m.factors().size(), 2u);
  EXPECT_EQ(m.factors()[0].first, "a");
  EXPECT_EQ(m.factors()[1].second, 2u);
  EXPECT_TRUE(ParamMonomial().is_one());
}
