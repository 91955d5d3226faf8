#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "symcalc/rational.hpp"

namespace symcalc {

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix transpose() const;
  /// Gauss-Jordan elimination; throws SingularMatrix.
  RationalMatrix inverse() const;
  Rational determinant() const;

  bool operator==(const RationalMatrix& other) const;

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

}  // namespace symcalc
