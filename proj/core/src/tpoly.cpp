#include "symcalc/tpoly.hpp"

#include <algorithm>

#include "symcalc/errors.hpp"

namespace symcalc {

TPoly TPoly::constant(const XUPoly& c, unsigned max_degree) {
  return monomial(c, 0, max_degree);
}

TPoly TPoly::monomial(const XUPoly& c, unsigned degree, unsigned max_degree) {
  TPoly p(c.n(), max_degree);
  p.add_coeff(degree, c);
  return p;
}

XUPoly TPoly::coeff(unsigned d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? XUPoly(n_) : it->second;
}

void TPoly::add_coeff(unsigned d, const XUPoly& c) {
  if (c.n() != n_) throw DimensionMismatch("TPoly: coefficient has wrong half-dimension");
  if (d > max_degree_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

unsigned TPoly::valuation() const noexcept {
  return coeffs_.empty() ? max_degree_ + 1 : coeffs_.begin()->first;
}

TPoly& TPoly::operator+=(const TPoly& other) {
  if (n_ != other.n_) throw DimensionMismatch("TPoly: half-dimensions differ");
  for (const auto& [d, c] : other.coeffs_) add_coeff(d, c);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
  if (n_ != other.n_) throw DimensionMismatch("TPoly: half-dimensions differ");
  for (const auto& [d, c] : other.coeffs_) add_coeff(d, -c);
  return *this;
}

TPoly& TPoly::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [d, p] : coeffs_) p *= c;
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& [d, p] : r.coeffs_) p = -p;
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("TPoly: half-dimensions differ");
  TPoly r(a.n_, std::min(a.max_degree_, b.max_degree_));
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) {
      if (da + db > r.max_degree_) break;
      r.add_coeff(da + db, ca * cb);
    }
  return r;
}

TPoly TPoly::derive(std::span<const unsigned> alpha_u, std::span<const unsigned> beta_x) const {
  TPoly r(n_, max_degree_);
  for (const auto& [d, c] : coeffs_) r.add_coeff(d, c.derive(alpha_u, beta_x));
  return r;
}

TPoly TPoly::derive_t() const {
  TPoly r(n_, max_degree_);
  for (const auto& [d, c] : coeffs_)
    if (d > 0) r.add_coeff(d - 1, c * ParamScalar(static_cast<long>(d)));
  return r;
}

TPoly TPoly::truncated(unsigned d) const {
  TPoly r(n_, max_degree_);
  for (const auto& [k, c] : coeffs_)
    if (k <= d) r.coeffs_.emplace(k, c);
  return r;
}

unsigned TPoly::degree_x(std::size_t i) const noexcept {
  unsigned d = 0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, c.degree_x(i));
  return d;
}

unsigned TPoly::degree_u(std::size_t i) const noexcept {
  unsigned d = 0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, c.degree_u(i));
  return d;
}

bool TPoly::operator==(const TPoly& other) const {
  return n_ == other.n_ && max_degree_ == other.max_degree_ && coeffs_ == other.coeffs_;
}

}  // namespace symcalc
