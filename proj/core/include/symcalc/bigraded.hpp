#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "symcalc/tw_symbol.hpp"

namespace symcalc {

/// Unfiltered series sum c_{j,d}(x;u) t^d hbar^{-j} with plain (commutative)
/// multiplication, truncated at t-degree <= max_degree and hbar-key <= max_key.
///
/// Truncation is exact for products of series whose keys are >= 0, which
/// is the only way the library uses it.
class BigradedSeries {
 public:
  using Key = std::pair<int, unsigned>;  // (hbar key j, t-degree d)
  using Coeffs = std::map<Key, XUPoly>;

  BigradedSeries() = default;
  BigradedSeries(std::size_t n, int max_key, unsigned max_degree)
      : n_(n), max_key_(max_key), max_degree_(max_degree) {}

  static BigradedSeries from_tw(const TWSymbol& f, int max_key);

  std::size_t n() const noexcept { return n_; }
  int max_key() const noexcept { return max_key_; }
  unsigned max_degree() const noexcept { return max_degree_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }

  XUPoly coeff(int key, unsigned degree) const;
  void add_term(int key, unsigned degree, const XUPoly& c);

  BigradedSeries& operator+=(const BigradedSeries& other);
  BigradedSeries& operator*=(const ParamScalar& c);
  friend BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b);

  /// Converts to a TW symbol of the given declared order, exact through
  /// max_degree. Keys above max_key are not represented, so this is only
  /// meaningful when the series is known to vanish there.
  TWSymbol to_tw(int order) const;

  bool operator==(const BigradedSeries& other) const;

 private:
  std::size_t n_ = 0;
  int max_key_ = 0;
  unsigned max_degree_ = 0;
  Coeffs coeffs_;
};

/// exp(y) = sum_{r=0}^{terms} y^r / r! with plain multiplication.
BigradedSeries exp_series(const BigradedSeries& y, unsigned terms);

}  // namespace symcalc
