#include <gtest/gtest.h>

#include "symcalc/errors.hpp"
#include "symcalc/random.hpp"
#include "symcalc/rational_matrix.hpp"

using namespace symcalc;

TEST(RationalMatrix, InverseAndDeterminant) {
  const RationalMatrix a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  EXPECT_EQ(a.determinant(), Rational(-2));
  const RationalMatrix inv{{Rational(-2), Rational(1)}, {Rational(3, 2), Rational(-1, 2)}};
  EXPECT_EQ(a.inverse(), inv);
  EXPECT_EQ(a * a.inverse(), RationalMatrix::identity(2));
  EXPECT_EQ(a.transpose().transpose(), a);
}

TEST(RationalMatrix, Singular) {
  const RationalMatrix a{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_EQ(a.determinant(), Rational(0));
  EXPECT_THROW(a.inverse(), SingularMatrix);
}

TEST(RationalMatrix, RandomInverses) {
  RandomSymbols rng(5);
  for (int i = 0; i < 20; ++i) {
    const RationalMatrix a = rng.invertible_matrix(3);
    EXPECT_EQ(a.inverse() * a, RationalMatrix::identity(3));
    EXPECT_EQ(a.inverse().determinant() * a.determinant(), Rational(1));
  }
}
