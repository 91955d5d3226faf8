#pragma once

#include <cstddef>
#include <map>
#include <span>

#include "symcalc/xu_poly.hpp"

namespace symcalc {

/// Polynomial in t truncated above degree D, with XUPoly coefficients.
/// Coefficients of t^d for d > D are not represented.
class TPoly {
 public:
  using Coeffs = std::map<unsigned, XUPoly>;

  TPoly() = default;
  TPoly(std::size_t n, unsigned max_degree) : n_(n), max_degree_(max_degree) {}

  static TPoly constant(const XUPoly& c, unsigned max_degree);
  static TPoly monomial(const XUPoly& c, unsigned degree, unsigned max_degree);

  std::size_t n() const noexcept { return n_; }
  unsigned max_degree() const noexcept { return max_degree_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of t^d (zero when absent or beyond the truncation).
  XUPoly coeff(unsigned d) const;
  void add_coeff(unsigned d, const XUPoly& c);

  /// Least d with a nonzero coefficient; D + 1 for the zero polynomial.
  unsigned valuation() const noexcept;

  TPoly& operator+=(const TPoly& other);
  TPoly& operator-=(const TPoly& other);
  TPoly& operator*=(const ParamScalar& c);
  TPoly operator-() const;
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  /// Product truncated at the common degree bound.
  friend TPoly operator*(const TPoly& a, const TPoly& b);

  TPoly derive(std::span<const unsigned> alpha_u, std::span<const unsigned> beta_x) const;
  /// d/dt; the result keeps the same degree bound.
  TPoly derive_t() const;
  XUPoly at_zero() const { return coeff(0); }
  /// Drops coefficients of degree > d.
  TPoly truncated(unsigned d) const;

  unsigned degree_x(std::size_t i) const noexcept;
  unsigned degree_u(std::size_t i) const noexcept;

  bool operator==(const TPoly& other) const;

 private:
  std::size_t n_ = 0;
  unsigned max_degree_ = 0;
  Coeffs coeffs_;
};

}  // namespace symcalc
