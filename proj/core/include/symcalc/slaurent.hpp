#pragma once

#include <cstddef>
#include <map>
#include <span>

#include "symcalc/xu_poly.hpp"

namespace symcalc {

/// Principal part at infinity sum_{k=0}^{Ns} c_k s^{-k-1}, the
/// representative of a class of compactly supported H^1 in the s-line.
/// Entire parts are zero in the quotient and never stored; the key k is the
/// "s-depth" of the basis element s^{-k-1}.
class SLaurent {
 public:
  using Coeffs = std::map<unsigned, XUPoly>;

  SLaurent() = default;
  SLaurent(std::size_t n, unsigned depth) : n_(n), depth_(depth) {}

  /// c * s^{-k-1}.
  static SLaurent basis(const XUPoly& c, unsigned k, unsigned depth);

  std::size_t n() const noexcept { return n_; }
  unsigned depth() const noexcept { return depth_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  XUPoly coeff(unsigned k) const;
  void add_coeff(unsigned k, const XUPoly& c);

  SLaurent& operator+=(const SLaurent& other);
  SLaurent& operator-=(const SLaurent& other);
  SLaurent& operator*=(const ParamScalar& c);
  SLaurent operator-() const;
  friend SLaurent operator+(SLaurent a, const SLaurent& b) { return a += b; }
  friend SLaurent operator-(SLaurent a, const SLaurent& b) { return a -= b; }

  SLaurent derive(std::span<const unsigned> alpha_u, std::span<const unsigned> beta_x) const;
  /// Residue normalised so that ds/s integrates to 1: the s^{-1} coefficient.
  XUPoly residue() const { return coeff(0); }
  SLaurent truncated(unsigned depth) const;

  unsigned degree_x(std::size_t i) const noexcept;
  unsigned degree_u(std::size_t i) const noexcept;

  bool operator==(const SLaurent& other) const;

 private:
  std::size_t n_ = 0;
  unsigned depth_ = 0;
  Coeffs coeffs_;
};

/// Convolution product in s:
///   s^{-a-1} * s^{-b-1} = C(a+b, a) s^{-a-b-1},
/// extended bilinearly. The output depth is min(f.depth, g.depth).
SLaurent convolve(const SLaurent& f, const SLaurent& g);

}  // namespace symcalc
