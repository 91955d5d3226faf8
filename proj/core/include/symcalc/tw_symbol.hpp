#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symcalc/tpoly.hpp"
#include "symcalc/w_symbol.hpp"

namespace symcalc {

/// Records which coefficients of a TW symbol are exactly known.
///
/// At hbar-level j the t-degrees 0..t_exact(j) are exact, where
///   t_exact(j) = -1                 for j below the floor,
///              = overrides[j]       when listed,
///              = cap                otherwise.
/// Overrides only ever lower the cap and only exist together with a floor.
class PrecisionWindow {
 public:
  PrecisionWindow() = default;
  explicit PrecisionWindow(int cap) : cap_(cap) {}
  PrecisionWindow(std::optional<int> floor, int cap, std::map<int, int> overrides = {});

  std::optional<int> floor() const noexcept { return floor_; }
  int cap() const noexcept { return cap_; }
  const std::map<int, int>& overrides() const noexcept { return overrides_; }

  int t_exact(int level) const;
  bool contains(int level, unsigned degree) const {
    return static_cast<int>(degree) <= t_exact(level);
  }
  /// Exact at every level through `max_degree`.
  bool is_full(unsigned max_degree) const {
    return !floor_ && overrides_.empty() && cap_ == static_cast<int>(max_degree);
  }

  PrecisionWindow shifted(int k) const;
  PrecisionWindow intersect(const PrecisionWindow& other) const;

  bool operator==(const PrecisionWindow&) const = default;

 private:
  std::optional<int> floor_;
  int cap_ = 0;
  std::map<int, int> overrides_;
};

/// A (level, t-degree) position inside a TW symbol.
struct Cell {
  int level;
  unsigned degree;
  bool operator==(const Cell&) const = default;
};

/// Total symbol sum_j f_j(t, x; u) hbar^{-j} of an element of TW, with each
/// f_j a polynomial in t truncated at degree D and a declared order m.
///
/// Filtration invariant: for j > m the coefficient f_j vanishes to order
/// j - m at t = 0. Only cells inside the precision window are stored.
class TWSymbol {
 public:
  using Coeffs = std::map<int, TPoly>;

  TWSymbol() = default;
  TWSymbol(std::size_t n, unsigned max_degree, int order);
  TWSymbol(std::size_t n, unsigned max_degree, int order, Coeffs coeffs, PrecisionWindow window);

  std::size_t n() const noexcept { return n_; }
  unsigned max_degree() const noexcept { return max_degree_; }
  int order() const noexcept { return order_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  const PrecisionWindow& window() const noexcept { return window_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  TPoly coeff(int level) const;
  XUPoly coeff(int level, unsigned degree) const;
  /// Adds c t^degree hbar^{-level}; cells outside the window are ignored.
  void add_term(int level, unsigned degree, const XUPoly& c);

  /// The cell's value is determined: either inside the window or forced to
  /// vanish by the filtration invariant.
  bool known(int level, unsigned degree) const;

  /// Stored nonzero cells that break the filtration invariant.
  std::vector<Cell> filtration_violations() const;
  bool satisfies_filtration() const { return filtration_violations().empty(); }

  /// Multiplication by hbar^{-k}: shifts levels and the declared order by k.
  TWSymbol shifted(int k) const;
  /// d/dt. Exact through one degree less; the declared order grows by one.
  TWSymbol derive_t() const;
  TWSymbol with_order(int order) const;

  TWSymbol& operator+=(const TWSymbol& other);
  TWSymbol& operator-=(const TWSymbol& other);
  TWSymbol operator-() const;
  friend TWSymbol operator+(TWSymbol a, const TWSymbol& b) { return a += b; }
  friend TWSymbol operator-(TWSymbol a, const TWSymbol& b) { return a -= b; }
  TWSymbol& operator*=(const ParamScalar& c);

  /// Equal on every cell inside both precision windows.
  bool agrees_with(const TWSymbol& other) const;
  bool operator==(const TWSymbol& other) const;

 private:
  void normalize();

  std::size_t n_ = 0;
  unsigned max_degree_ = 0;
  int order_ = 0;
  Coeffs coeffs_;
  PrecisionWindow window_;
};

/// Leibniz formula with hbar-Cauchy products and t-multiplication truncated
/// at D. The declared order is additive; the precision window is the set of
/// cells provably unaffected by either operand's unknown coefficients.
TWSymbol star(const TWSymbol& f, const TWSymbol& g);

/// Window of a product, computed by the exactness predicate described in
/// star(). Exposed for the window-validation tests.
PrecisionWindow product_window(const TWSymbol& f, const TWSymbol& g);

/// Embeds P with t-constant coefficients.
TWSymbol iota_t(const WSymbol& p, unsigned max_degree);
/// Evaluation at t = 0.
WSymbol res_t(const TWSymbol& f);

}  // namespace symcalc
