#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "symcalc/slaurent.hpp"
#include "symcalc/w_symbol.hpp"

namespace symcalc {

/// Total symbol sum_j f_j(s, x; u) hbar^{-j} of an element of SW, each f_j a
/// principal part at infinity in s truncated at a shared depth Ns.
///
/// Exactness: every s-depth <= Ns is exact on the known hbar-levels; the
/// optional floor plays the same role as for WSymbol.
class SWSymbol {
 public:
  using Coeffs = std::map<int, SLaurent>;

  SWSymbol() = default;
  SWSymbol(std::size_t n, unsigned depth) : n_(n), depth_(depth) {}
  SWSymbol(std::size_t n, unsigned depth, Coeffs coeffs,
           std::optional<int> floor = std::nullopt);

  std::size_t n() const noexcept { return n_; }
  unsigned depth() const noexcept { return depth_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  std::optional<int> floor() const noexcept { return floor_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  SLaurent coeff(int key) const;
  void add_coeff(int key, const SLaurent& c);

  int order() const noexcept;
  /// Coefficient of c * s^{-k-1} hbar^{-j}.
  XUPoly coeff(int key, unsigned k) const;
  void add_term(int key, unsigned k, const XUPoly& c);

  SWSymbol truncated(int floor) const;
  SWSymbol with_depth(unsigned depth) const;

  SWSymbol& operator+=(const SWSymbol& other);
  SWSymbol& operator-=(const SWSymbol& other);
  SWSymbol operator-() const;
  friend SWSymbol operator+(SWSymbol a, const SWSymbol& b) { return a += b; }
  friend SWSymbol operator-(SWSymbol a, const SWSymbol& b) { return a -= b; }

  /// Equal on every (level, depth) both operands know exactly.
  bool agrees_with(const SWSymbol& other) const;
  bool operator==(const SWSymbol& other) const;

 private:
  std::size_t n_ = 0;
  unsigned depth_ = 0;
  Coeffs coeffs_;
  std::optional<int> floor_;
};

/// Leibniz formula with the s-convolution replacing pointwise products.
SWSymbol star(const SWSymbol& p, const SWSymbol& q);
/// P -> (1/s) P.
SWSymbol iota(const WSymbol& p, unsigned depth);
/// Residue at infinity of each hbar-level.
WSymbol res(const SWSymbol& p);
/// 1/(s - P) = sum_{k=0}^{depth} P^{*k} s^{-k-1}; requires ord(P) <= 0.
SWSymbol resolvent(const WSymbol& p, unsigned depth);

}  // namespace symcalc
