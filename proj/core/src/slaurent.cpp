#include "symcalc/slaurent.hpp"

#include <algorithm>

#include "symcalc/errors.hpp"

namespace symcalc {

SLaurent SLaurent::basis(const XUPoly& c, unsigned k, unsigned depth) {
  SLaurent f(c.n(), depth);
  f.add_coeff(k, c);
  return f;
}

XUPoly SLaurent::coeff(unsigned k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? XUPoly(n_) : it->second;
}

void SLaurent::add_coeff(unsigned k, const XUPoly& c) {
  if (c.n() != n_) throw DimensionMismatch("SLaurent: coefficient has wrong half-dimension");
  if (k > depth_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SLaurent& SLaurent::operator+=(const SLaurent& other) {
  if (n_ != other.n_) throw DimensionMismatch("SLaurent: half-dimensions differ");
  for (const auto& [k, c] : other.coeffs_) add_coeff(k, c);
  return *this;
}

SLaurent& SLaurent::operator-=(const SLaurent& other) {
  if (n_ != other.n_) throw DimensionMismatch("SLaurent: half-dimensions differ");
  for (const auto& [k, c] : other.coeffs_) add_coeff(k, -c);
  return *this;
}

SLaurent& SLaurent::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, p] : coeffs_) p *= c;
  return *this;
}

SLaurent SLaurent::operator-() const {
  SLaurent r = *this;
  for (auto& [k, p] : r.coeffs_) p = -p;
  return r;
}

SLaurent SLaurent::derive(std::span<const unsigned> alpha_u,
                          std::span<const unsigned> beta_x) const {
  SLaurent r(n_, depth_);
  for (const auto& [k, c] : coeffs_) r.add_coeff(k, c.derive(alpha_u, beta_x));
  return r;
}

SLaurent SLaurent::truncated(unsigned depth) const {
  SLaurent r(n_, depth);
  for (const auto& [k, c] : coeffs_)
    if (k <= depth) r.coeffs_.emplace(k, c);
  return r;
}

unsigned SLaurent::degree_x(std::size_t i) const noexcept {
  unsigned d = 0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, c.degree_x(i));
  return d;
}

unsigned SLaurent::degree_u(std::size_t i) const noexcept {
  unsigned d = 0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, c.degree_u(i));
  return d;
}

bool SLaurent::operator==(const SLaurent& other) const {
  return n_ == other.n_ && depth_ == other.depth_ && coeffs_ == other.coeffs_;
}

SLaurent convolve(const SLaurent& f, const SLaurent& g) {
  if (f.n() != g.n()) throw DimensionMismatch("convolve: half-dimensions differ");
  SLaurent h(f.n(), std::min(f.depth(), g.depth()));
  for (const auto& [a, fa] : f.coeffs())
    for (const auto& [b, gb] : g.coeffs()) {
      if (a + b > h.depth()) break;
      h.add_coeff(a + b, fa * gb * ParamScalar(Rational(binomial(a + b, a))));
    }
  return h;
}

}  // namespace symcalc
