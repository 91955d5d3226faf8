#pragma once

#include <cstdint>
#include <random>

#include "symcalc/rational_matrix.hpp"
#include "symcalc/sw_symbol.hpp"
#include "symcalc/tw_symbol.hpp"
#include "symcalc/w_symbol.hpp"

namespace symcalc {

/// Seeded generator of small random core values. The reduction `% range`
/// keeps streams identical across standard libraries.
class RandomSymbols {
 public:
  explicit RandomSymbols(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);
  bool chance(unsigned percent) { return uniform(0, 99) < static_cast<int>(percent); }
  /// num/den with |num| <= 4, 1 <= den <= 3.
  Rational small_rational(bool nonzero = false);

  XUPoly poly(std::size_t n, unsigned max_degree, unsigned max_terms);
  /// Levels in [lo, hi]; each level present with probability 3/4.
  WSymbol w_symbol(std::size_t n, int lo, int hi, unsigned max_degree, unsigned max_terms = 3);
  SWSymbol sw_symbol(std::size_t n, unsigned depth, int lo, int hi, unsigned max_degree,
                     unsigned max_terms = 2);
  /// Random TW section of declared order `order`: levels in [order - below, order + D],
  /// every cell respecting the filtration invariant.
  TWSymbol tw_symbol(std::size_t n, unsigned max_degree, int order, int below,
                     unsigned poly_degree, unsigned max_terms = 2);
  RationalMatrix invertible_matrix(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace symcalc
