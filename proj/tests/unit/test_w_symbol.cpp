#include <gtest/gtest.h>

#include <vector>

#include "helpers.hpp"
#include "symcalc/errors.hpp"
#include "symcalc/random.hpp"

using namespace symcalc;
using test::w;

namespace {

// Normal-ordered operator of a symbol acting on an x-only function with
// formal hbar: c x^beta u^alpha hbar^{-j}  ->  c hbar^{-j} x^beta (hbar d_x)^alpha.
WSymbol apply(const WSymbol& symbol, const WSymbol& f) {
  const std::size_t n = symbol.n();
  const std::vector<unsigned> none(n, 0);
  WSymbol out(n);
  for (const auto& [j, c] : symbol.coeffs())
    for (const auto& [m, coeff] : c.terms()) {
      std::vector<unsigned> alpha(n);
      Monomial left(n);
      unsigned order = 0;
      for (std::size_t i = 0; i < n; ++i) {
        alpha[i] = m.u(i);
        left.x(i) = m.x(i);
        order += m.u(i);
      }
      for (const auto& [k, g] : f.coeffs()) {
        const XUPoly dg = g.derive(none, alpha);
        out.add_coeff(j + k - static_cast<int>(order), XUPoly::monomial(left, coeff) * dg);
      }
    }
  return out;
}

std::vector<WSymbol> test_functions(std::size_t n, unsigned max_degree) {
  std::vector<WSymbol> fs;
  std::vector<unsigned> e(n, 0);
  for (;;) {
    unsigned total = 0;
    for (unsigned v : e) total += v;
    if (total <= max_degree) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.x(i) = e[i];
      fs.push_back(WSymbol::from_poly(XUPoly::monomial(m, ParamScalar(1))));
    }
    std::size_t i = 0;
    while (i < n && ++e[i] > max_degree) e[i++] = 0;
    if (i == n) return fs;
  }
}

}  // namespace

TEST(WStar, Examples) {
  EXPECT_EQ(star(w("x1"), w("u1")), w("x1*u1"));
  EXPECT_EQ(star(w("u1"), w("x1")), w("x1*u1 + h"));
  EXPECT_EQ(star(w("u1^2"), w("x1^2")), w("x1^2*u1^2 + 4*h*x1*u1 + 2*h^2"));
}

TEST(WStar, MatchesOperatorComposition) {
  RandomSymbols rng(2024);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + i % 2;
    const WSymbol p = rng.w_symbol(n, -1, 1, 2);
    const WSymbol q = rng.w_symbol(n, -1, 1, 2);
    const WSymbol pq = star(p, q);
    for (const WSymbol& f : test_functions(n, 4)) EXPECT_EQ(apply(pq, f), apply(p, apply(q, f)));
  }
}

TEST(WStar, ParameterCoefficients) {
  const WSymbol p = w("theta*u1");
  EXPECT_EQ(star(p, w("x1")), w("theta*x1*u1 + theta*h"));
}

TEST(WStar, DimensionMismatch) { EXPECT_THROW(star(w("x1"), w("x1", 2)), DimensionMismatch); }

TEST(WSymbol, OrderAndPrincipalSymbol) {
  EXPECT_EQ(w("x1*u1 + h").order(), 0);
  EXPECT_EQ(w("x1*u1 + h").principal_symbol().coeff, test::poly("x1*u1"));
  const PrincipalSymbol ps = w("h^-2*x1").principal_symbol();
  EXPECT_EQ(ps.order, 2);
  EXPECT_EQ(ps.coeff, test::poly("x1"));
  EXPECT_EQ(w("0").order(), kOrderMinusInfinity);
  EXPECT_EQ(w("0").principal_symbol().order, kOrderMinusInfinity);
}

TEST(WSymbol, OrdersAreSubadditive) {
  RandomSymbols rng(3);
  for (int i = 0; i < 30; ++i) {
    const WSymbol p = rng.w_symbol(2, -2, 2, 2);
    const WSymbol q = rng.w_symbol(2, -2, 2, 2);
    const WSymbol pq = star(p, q);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_LE(pq.order(), p.order() + q.order());
  }
}

TEST(WPowStar, Examples) {
  const WSymbol p = w("theta*x1*u1");
  EXPECT_EQ(pow_star(p, 2), w("theta^2*x1^2*u1^2 + theta^2*h*x1*u1"));
  EXPECT_EQ(pow_star(w("x1*u1 + u1^2"), 0), w("1"));
  EXPECT_EQ(pow_star(w("x1"), 3), w("x1^3"));
}

TEST(WCommutator, Examples) {
  EXPECT_EQ(commutator(w("u1"), w("x1")), w("h"));
  EXPECT_TRUE(commutator(w("x1", 2), w("x2", 2)).is_zero());
  EXPECT_EQ(commutator(w("u1^2"), w("x1")), w("2*h*u1"));
}

TEST(WSymbol, HbarKeys) {
  const WSymbol p = w("x1^2 + 2*h^-1");
  EXPECT_EQ(p.coeff(1), test::poly("2"));
  EXPECT_EQ(p.coeff(0), test::poly("x1^2"));
  EXPECT_EQ(WSymbol::hbar(1, 2), w("h^2"));
  EXPECT_EQ(p.shifted(1).coeff(2), test::poly("2"));
}

TEST(WSymbol, TruncationFloors) {
  const WSymbol p = w("x1 + h*u1 + h^2").truncated(-1);
  EXPECT_EQ(p.floor(), std::optional<int>(-1));
  EXPECT_TRUE(p.coeff(-2).is_zero());
  EXPECT_TRUE(p.agrees_with(w("x1 + h*u1 + 5*h^2")));
  EXPECT_FALSE(p.agrees_with(w("x1 + 2*h*u1")));
}

// The claimed floor of a truncated product must survive every completion of
// the unknown levels.
TEST(WStar, ProductFloorIsSound) {
  RandomSymbols rng(99);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 2;
    const WSymbol p = rng.w_symbol(n, -2, 2, 2).truncated(rng.uniform(-2, 1));
    const WSymbol q = rng.w_symbol(n, -2, 2, 2).truncated(rng.uniform(-2, 1));
    const WSymbol claimed = star(p, q);
    for (int trial = 0; trial < 3; ++trial) {
      WSymbol pc(n), qc(n);
      for (const auto& [j, c] : p.coeffs()) pc.add_coeff(j, c);
      for (const auto& [j, c] : q.coeffs()) qc.add_coeff(j, c);
      for (int j = *p.floor() - 5; j < *p.floor(); ++j) pc.add_coeff(j, rng.poly(n, 2, 2));
      for (int j = *q.floor() - 5; j < *q.floor(); ++j) qc.add_coeff(j, rng.poly(n, 2, 2));
      EXPECT_TRUE(claimed.agrees_with(star(pc, qc))) << "case " << i;
    }
  }
}

TEST(WStar, ExactTimesZeroIsExactZero) {
  const WSymbol p = w("x1 + h^-1").truncated(0);
  const WSymbol r = star(p, WSymbol(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(r.is_exact());
}

TEST(WSymbol, AffineSubstituteChecks) {
  const RationalMatrix id2 = RationalMatrix::identity(2);
  EXPECT_THROW(affine_substitute(w("x1"), id2), DimensionMismatch);
  EXPECT_THROW(affine_substitute(w("x1", 2), RationalMatrix(2)), SingularMatrix);
}
