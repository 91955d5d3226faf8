#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>

#include "symcalc/rational_matrix.hpp"
#include "symcalc/xu_poly.hpp"

namespace symcalc {

/// Order of the zero symbol: below every integer, so that
/// ord(P*Q) <= ord(P) + ord(Q) stays a true statement.
inline constexpr int kOrderMinusInfinity = std::numeric_limits<int>::min();

struct PrincipalSymbol {
  int order = kOrderMinusInfinity;
  XUPoly coeff;
};

/// Total symbol sum_j p_j(x;u) hbar^{-j} of an element of W.
///
/// The key j stores the coefficient of hbar^{-j} (ord(hbar) = -1). A symbol
/// either is an exact finite sum (no floor) or carries an exactness floor:
/// the stored levels >= floor are exact and everything below it is unknown.
class WSymbol {
 public:
  using Coeffs = std::map<int, XUPoly>;

  WSymbol() = default;
  explicit WSymbol(std::size_t n) : n_(n) {}
  WSymbol(std::size_t n, Coeffs coeffs, std::optional<int> floor = std::nullopt);

  static WSymbol constant(std::size_t n, const ParamScalar& c);
  /// p * hbar^{-key}.
  static WSymbol from_poly(const XUPoly& p, int key = 0);
  /// hbar^power.
  static WSymbol hbar(std::size_t n, int power = 1);

  std::size_t n() const noexcept { return n_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  std::optional<int> floor() const noexcept { return floor_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_exact() const noexcept { return !floor_.has_value(); }

  XUPoly coeff(int key) const;
  void add_coeff(int key, const XUPoly& c);

  /// Tight order m, kOrderMinusInfinity for zero.
  int order() const noexcept;
  PrincipalSymbol principal_symbol() const;

  /// Forgets every level below `floor`.
  WSymbol truncated(int floor) const;
  /// Multiplication by hbar^{-k}.
  WSymbol shifted(int k) const;

  WSymbol& operator+=(const WSymbol& other);
  WSymbol& operator-=(const WSymbol& other);
  WSymbol& operator*=(const ParamScalar& c);
  WSymbol operator-() const;
  friend WSymbol operator+(WSymbol a, const WSymbol& b) { return a += b; }
  friend WSymbol operator-(WSymbol a, const WSymbol& b) { return a -= b; }
  friend WSymbol operator*(WSymbol a, const ParamScalar& c) { return a *= c; }

  /// Equal on every level both operands know exactly.
  bool agrees_with(const WSymbol& other) const;

  bool operator==(const WSymbol& other) const;

 private:
  std::size_t n_ = 0;
  Coeffs coeffs_;
  std::optional<int> floor_;
};

/// sigma(P o Q) = sum_alpha hbar^{|alpha|}/alpha! d_u^alpha P * d_x^alpha Q.
WSymbol star(const WSymbol& p, const WSymbol& q);
/// P^{*k}; P^{*0} = 1.
WSymbol pow_star(const WSymbol& p, unsigned k);
WSymbol commutator(const WSymbol& p, const WSymbol& q);
/// Coefficient-wise pullback along (x, u) -> (A x, A^{-T} u).
WSymbol affine_substitute(const WSymbol& p, const RationalMatrix& a);

/// Floor of a product of operands with the given floors and orders, or
/// nullopt when the product is exact.
std::optional<int> product_floor(std::optional<int> floor_p, std::optional<int> top_p,
                                 std::optional<int> floor_q, std::optional<int> top_q);

}  // namespace symcalc
