#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symcalc/errors.hpp"
#include "symcalc/laplace.hpp"
#include "symcalc/random.hpp"
#include "symcalc/star_exp.hpp"

using namespace symcalc;
using test::tw;
using test::w;

namespace {

TWSymbol exp_t_over_h(unsigned d) {
  TWSymbol f(0, d, 0);
  for (unsigned k = 0; k <= d; ++k)
    f.add_term(static_cast<int>(k), k, XUPoly(0, ParamScalar(Rational(1) / factorial(k))));
  return f;
}

// Same known cells, random values everywhere the window and the filtration
// leave undetermined.
TWSymbol random_completion(const TWSymbol& f, RandomSymbols& rng, int low, int high) {
  TWSymbol full(f.n(), f.max_degree(), f.order(), {}, PrecisionWindow(static_cast<int>(f.max_degree())));
  for (const auto& [j, p] : f.coeffs())
    for (const auto& [d, c] : p.coeffs()) full.add_term(j, d, c);
  for (int j = low; j <= high; ++j)
    for (unsigned d = 0; d <= f.max_degree(); ++d)
      if (!f.known(j, d) && rng.chance(60)) full.add_term(j, d, rng.poly(f.n(), 2, 2));
  return full;
}

}  // namespace

TEST(PrecisionWindow, Basics) {
  const PrecisionWindow full(4);
  EXPECT_TRUE(full.is_full(4));
  EXPECT_EQ(full.t_exact(-100), 4);
  const PrecisionWindow w(-2, 4, {{-2, 0}, {-1, 1}});
  EXPECT_EQ(w.t_exact(-3), -1);
  EXPECT_EQ(w.t_exact(-2), 0);
  EXPECT_EQ(w.t_exact(-1), 1);
  EXPECT_EQ(w.t_exact(0), 4);
  EXPECT_TRUE(w.contains(-1, 1));
  EXPECT_FALSE(w.contains(-1, 2));
  EXPECT_THROW(PrecisionWindow(std::nullopt, 4, {{0, 1}}), PreconditionError);
  const PrecisionWindow meet = w.intersect(PrecisionWindow(-1, 3));
  EXPECT_EQ(meet.t_exact(-2), -1);
  EXPECT_EQ(meet.t_exact(-1), 1);
  EXPECT_EQ(meet.t_exact(5), 3);
  EXPECT_EQ(w.shifted(1).t_exact(0), 1);
}

TEST(TWSymbol, FiltrationInvariant) {
  TWSymbol f(1, 4, 0);
  f.add_term(2, 1, test::poly("x1"));
  EXPECT_FALSE(f.satisfies_filtration());
  ASSERT_EQ(f.filtration_violations().size(), 1u);
  EXPECT_EQ(f.filtration_violations()[0], (Cell{2, 1}));
  EXPECT_TRUE(tw("t^2*h^-2*x1", 4, 0).satisfies_filtration());
  EXPECT_THROW(tw("t*h^-2*x1", 4, 0), FiltrationViolation);
  EXPECT_EQ(tw("t*h^-2*x1 + h^-1", 4).order(), 1);
}

TEST(TWSymbol, KnownCells) {
  const TWSymbol f(1, 3, 0, {}, PrecisionWindow(0, 3, {{0, 0}}));
  EXPECT_FALSE(f.known(-1, 0));
  EXPECT_TRUE(f.known(0, 0));
  EXPECT_FALSE(f.known(0, 1));
  EXPECT_TRUE(f.known(3, 2));
}

TEST(TWStar, Examples) {
  RandomSymbols rng(4);
  const TWSymbol one = iota_t(w("1"), 4);
  for (int i = 0; i < 10; ++i) {
    const TWSymbol f = rng.tw_symbol(1, 4, rng.uniform(-1, 1), 1, 2);
    EXPECT_EQ(star(one, f), f);
  }
  TWSymbol two(0, 6, 0);
  for (unsigned k = 0; k <= 6; ++k)
    two.add_term(static_cast<int>(k), k, XUPoly(0, ParamScalar(power(Rational(2), k) / factorial(k))));
  EXPECT_EQ(star(exp_t_over_h(6), exp_t_over_h(6)), two);
  EXPECT_EQ(star(iota_t(w("u1"), 3), iota_t(w("x1"), 3)), iota_t(w("x1*u1 + h"), 3));
}

TEST(TWStar, IotaIsAMorphism) {
  RandomSymbols rng(14);
  for (int i = 0; i < 20; ++i) {
    const WSymbol p = rng.w_symbol(2, -1, 1, 2);
    const WSymbol q = rng.w_symbol(2, -1, 1, 2);
    EXPECT_EQ(star(iota_t(p, 3), iota_t(q, 3)), iota_t(star(p, q), 3));
  }
}

TEST(TWStar, OrderIsAdditive) {
  const TWSymbol f = tw("h^-1 + t*h^-2", 3);
  const TWSymbol g = tw("x1 + t^2*h^-2", 3, 0);
  EXPECT_EQ(star(f, g).order(), 1);
  EXPECT_TRUE(star(f, g).satisfies_filtration());
}

TEST(TWStar, DimensionChecks) {
  EXPECT_THROW(star(tw("1", 3), tw("1", 4)), DimensionMismatch);
  EXPECT_THROW(star(tw("x1", 3), tw("x1", 3, std::nullopt, 2)), DimensionMismatch);
}

TEST(IotaT, Examples) {
  const TWSymbol f = iota_t(w("x1*u1 + h"), 3);
  EXPECT_EQ(f.coeff(0, 0), test::poly("x1*u1"));
  EXPECT_EQ(f.coeff(-1, 0), test::poly("1"));
  EXPECT_TRUE(f.coeff(0, 1).is_zero());
  EXPECT_EQ(res_t(exp_t_over_h(4)), WSymbol::constant(0, ParamScalar(1)));
}

TEST(TWSymbol, DeriveT) {
  const TWSymbol f = tw("1 + t*h^-1*x1 + t^2*h^-2", 3);
  const TWSymbol df = f.derive_t();
  EXPECT_EQ(df.order(), f.order() + 1);
  EXPECT_EQ(df.window().cap(), 2);
  EXPECT_EQ(df.coeff(1, 0), test::poly("x1"));
  EXPECT_EQ(df.coeff(2, 1), test::poly("2"));
}

// Soundness of the product window: any two completions of the unknown input
// cells give the same product on every cell the window claims.
TEST(TWStar, ProductWindowIsSound) {
  RandomSymbols rng(77);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 2;
    const unsigned d = 4;
    const SWSymbol a = rng.sw_symbol(n, d, -2, 1, 2, 1);
    const SWSymbol b = rng.sw_symbol(n, d, -2, 1, 2, 1);
    const TWSymbol f = laplace(a.truncated(rng.uniform(-2, 1)), d);
    const TWSymbol g = i % 3 == 0 ? laplace(b, d) : laplace(b.truncated(rng.uniform(-2, 1)), d);
    const TWSymbol claimed = star(f, g);
    EXPECT_EQ(claimed.window(), product_window(f, g));
    for (int trial = 0; trial < 3; ++trial) {
      const TWSymbol fc = random_completion(f, rng, f.order() - 7, f.order() + static_cast<int>(d));
      const TWSymbol gc = random_completion(g, rng, g.order() - 7, g.order() + static_cast<int>(d));
      ASSERT_TRUE(fc.satisfies_filtration());
      ASSERT_TRUE(gc.satisfies_filtration());
      EXPECT_TRUE(claimed.agrees_with(star(fc, gc))) << "case " << i;
    }
  }
}

TEST(TWStar, ProductWindowKeepsExactInputsExact) {
  RandomSymbols rng(78);
  for (int i = 0; i < 10; ++i) {
    const TWSymbol f = rng.tw_symbol(2, 4, 0, 2, 2);
    const TWSymbol g = rng.tw_symbol(2, 4, -1, 2, 2);
    EXPECT_TRUE(star(f, g).window().is_full(4));
  }
}

TEST(TWStar, WindowedProductIsNotEmpty) {
  const SWSymbol a = test::sw("sinv + x1*sinv^2 + h*u1*sinv", 4).truncated(-1);
  const TWSymbol f = laplace(a, 4);
  const TWSymbol g = star(f, f);
  EXPECT_GE(g.window().t_exact(g.order()), 0);
}
