#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "symcalc/param_scalar.hpp"

namespace symcalc {

class RationalMatrix;

/// Exponents of a phase-space monomial x^beta u^alpha, laid out as
/// [beta_1..beta_n, alpha_1..alpha_n].
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(2 * n, 0) {}
  Monomial(std::span<const unsigned> x, std::span<const unsigned> u);

  std::size_t n() const noexcept { return exps_.size() / 2; }
  unsigned x(std::size_t i) const { return exps_[i]; }
  unsigned u(std::size_t i) const { return exps_[n() + i]; }
  unsigned& x(std::size_t i) { return exps_[i]; }
  unsigned& u(std::size_t i) { return exps_[n() + i]; }
  unsigned degree() const noexcept;
  bool is_one() const noexcept;

  Monomial operator*(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
};

/// Sparse polynomial in x_1..x_n, u_1..u_n with ParamScalar coefficients.
/// Zero coefficients are never stored.
class XUPoly {
 public:
  using Terms = std::map<Monomial, ParamScalar>;

  XUPoly() = default;
  explicit XUPoly(std::size_t n) : n_(n) {}
  XUPoly(std::size_t n, const ParamScalar& constant);

  /// The coordinate functions; index i is 0-based.
  static XUPoly x(std::size_t n, std::size_t i);
  static XUPoly u(std::size_t n, std::size_t i);
  static XUPoly monomial(const Monomial& m, const ParamScalar& c);

  std::size_t n() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  unsigned degree_x(std::size_t i) const noexcept;
  unsigned degree_u(std::size_t i) const noexcept;

  void add_term(const Monomial& m, const ParamScalar& c);

  XUPoly& operator+=(const XUPoly& other);
  XUPoly& operator-=(const XUPoly& other);
  XUPoly& operator*=(const ParamScalar& c);
  XUPoly operator-() const;

  friend XUPoly operator+(XUPoly a, const XUPoly& b) { return a += b; }
  friend XUPoly operator-(XUPoly a, const XUPoly& b) { return a -= b; }
  friend XUPoly operator*(const XUPoly& a, const XUPoly& b);
  friend XUPoly operator*(XUPoly a, const ParamScalar& c) { return a *= c; }
  friend XUPoly operator*(const ParamScalar& c, XUPoly a) { return a *= c; }

  /// d_u^alpha d_x^beta applied to this polynomial.
  XUPoly derive(std::span<const unsigned> alpha_u, std::span<const unsigned> beta_x) const;

  /// Pullback along (x, u) -> (A x, A^{-T} u); throws SingularMatrix.
  XUPoly affine_substitute(const RationalMatrix& a) const;

  /// Replaces parameters by rational values.
  XUPoly evaluate_params(const ParamAssignment& values) const;

  bool operator==(const XUPoly& other) const;

 private:
  void check_dim(const XUPoly& other) const;

  std::size_t n_ = 0;
  Terms terms_;
};

}  // namespace symcalc
