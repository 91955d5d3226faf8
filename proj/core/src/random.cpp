#include "symcalc/random.hpp"

namespace symcalc {

int RandomSymbols::uniform(int lo, int hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % range);
}

Rational RandomSymbols::small_rational(bool nonzero) {
  int num = uniform(-4, 4);
  if (nonzero && num == 0) num = 1;
  Rational r(num, uniform(1, 3));
  r.canonicalize();
  return r;
}

XUPoly RandomSymbols::poly(std::size_t n, unsigned max_degree, unsigned max_terms) {
  XUPoly p(n);
  const int terms = uniform(1, static_cast<int>(max_terms));
  for (int i = 0; i < terms; ++i) {
    Monomial m(n);
    int budget = uniform(0, static_cast<int>(max_degree));
    while (budget-- > 0) {
      const auto slot = static_cast<std::size_t>(uniform(0, static_cast<int>(2 * n) - 1));
      if (slot < n)
        ++m.x(slot);
      else
        ++m.u(slot - n);
    }
    p.add_term(m, ParamScalar(small_rational(true)));
  }
  return p;
}

WSymbol RandomSymbols::w_symbol(std::size_t n, int lo, int hi, unsigned max_degree,
                                unsigned max_terms) {
  WSymbol p(n);
  for (int j = lo; j <= hi; ++j)
    if (chance(75)) p.add_coeff(j, poly(n, max_degree, max_terms));
  return p;
}

SWSymbol RandomSymbols::sw_symbol(std::size_t n, unsigned depth, int lo, int hi,
                                  unsigned max_degree, unsigned max_terms) {
  SWSymbol p(n, depth);
  for (int j = lo; j <= hi; ++j)
    for (unsigned k = 0; k <= depth; ++k)
      if (chance(40)) p.add_term(j, k, poly(n, max_degree, max_terms));
  return p;
}

TWSymbol RandomSymbols::tw_symbol(std::size_t n, unsigned max_degree, int order, int below,
                                  unsigned poly_degree, unsigned max_terms) {
  TWSymbol f(n, max_degree, order);
  const int top = order + static_cast<int>(max_degree);
  for (int j = order - below; j <= top; ++j) {
    const unsigned first = j > order ? static_cast<unsigned>(j - order) : 0;
    for (unsigned d = first; d <= max_degree; ++d)
      if (chance(35)) f.add_term(j, d, poly(n, poly_degree, max_terms));
  }
  return f;
}

RationalMatrix RandomSymbols::invertible_matrix(std::size_t n) {
  for (;;) {
    RationalMatrix a(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = small_rational();
    if (a.determinant() != 0) return a;
  }
}

}  // namespace symcalc
