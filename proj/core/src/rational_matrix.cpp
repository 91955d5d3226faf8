#include "symcalc/rational_matrix.hpp"

#include <utility>

#include "symcalc/errors.hpp"

namespace symcalc {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch("RationalMatrix: rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (n_ != other.n_) throw DimensionMismatch("RationalMatrix: size mismatch");
  RationalMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * other(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a(pivot, col) == 0) ++pivot;
    if (pivot == n_) throw SingularMatrix("matrix is not invertible over the rationals");
    if (pivot != col)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n_; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n_; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix a = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n_; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return n_ == other.n_ && data_ == other.data_;
}

}  // namespace symcalc
