#include "symcalc/xu_poly.hpp"

#include <algorithm>

#include "symcalc/errors.hpp"
#include "symcalc/rational_matrix.hpp"

namespace symcalc {

Monomial::Monomial(std::span<const unsigned> x, std::span<const unsigned> u) {
  if (x.size() != u.size()) throw DimensionMismatch("Monomial: x and u exponent lengths differ");
  exps_.assign(x.begin(), x.end());
  exps_.insert(exps_.end(), u.begin(), u.end());
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

XUPoly::XUPoly(std::size_t n, const ParamScalar& constant) : n_(n) {
  if (!constant.is_zero()) terms_.emplace(Monomial(n), constant);
}

XUPoly XUPoly::x(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionMismatch("x index out of range");
  Monomial m(n);
  m.x(i) = 1;
  return monomial(m, ParamScalar(1));
}

XUPoly XUPoly::u(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionMismatch("u index out of range");
  Monomial m(n);
  m.u(i) = 1;
  return monomial(m, ParamScalar(1));
}

XUPoly XUPoly::monomial(const Monomial& m, const ParamScalar& c) {
  XUPoly p(m.n());
  p.add_term(m, c);
  return p;
}

int XUPoly::degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

unsigned XUPoly::degree_x(std::size_t i) const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x(i));
  return d;
}

unsigned XUPoly::degree_u(std::size_t i) const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.u(i));
  return d;
}

void XUPoly::add_term(const Monomial& m, const ParamScalar& c) {
  if (m.n() != n_) throw DimensionMismatch("XUPoly: monomial has wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void XUPoly::check_dim(const XUPoly& other) const {
  if (n_ != other.n_)
    throw DimensionMismatch("XUPoly: half-dimensions " + std::to_string(n_) + " and " +
                            std::to_string(other.n_) + " differ");
}

XUPoly& XUPoly::operator+=(const XUPoly& other) {
  check_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

XUPoly& XUPoly::operator-=(const XUPoly& other) {
  check_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

XUPoly& XUPoly::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

XUPoly XUPoly::operator-() const {
  XUPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

XUPoly operator*(const XUPoly& a, const XUPoly& b) {
  a.check_dim(b);
  XUPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

XUPoly XUPoly::derive(std::span<const unsigned> alpha_u, std::span<const unsigned> beta_x) const {
  if (alpha_u.size() != n_ || beta_x.size() != n_)
    throw DimensionMismatch("derive: multi-index length differs from n");
  XUPoly r(n_);
  for (const auto& [m, c] : terms_) {
    Monomial dm = m;
    Integer factor = 1;
    bool vanishes = false;
    for (std::size_t i = 0; i < n_ && !vanishes; ++i) {
      if (m.u(i) < alpha_u[i] || m.x(i) < beta_x[i]) {
        vanishes = true;
        break;
      }
      for (unsigned k = 0; k < alpha_u[i]; ++k) factor *= m.u(i) - k;
      for (unsigned k = 0; k < beta_x[i]; ++k) factor *= m.x(i) - k;
      dm.u(i) -= alpha_u[i];
      dm.x(i) -= beta_x[i];
    }
    if (vanishes) continue;
    r.add_term(dm, c * ParamScalar(Rational(factor)));
  }
  return r;
}

namespace {

/// Caches successive powers of a linear form.
class PowerCache {
 public:
  explicit PowerCache(XUPoly base) : powers_{XUPoly(base.n(), ParamScalar(1)), std::move(base)} {}

  const XUPoly& get(unsigned k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[k];
  }

 private:
  std::vector<XUPoly> powers_;
};

}  // namespace

XUPoly XUPoly::affine_substitute(const RationalMatrix& a) const {
  if (a.size() != n_) throw DimensionMismatch("affine_substitute: matrix size differs from n");
  const RationalMatrix b = a.inverse().transpose();
  std::vector<PowerCache> xs;
  std::vector<PowerCache> us;
  for (std::size_t i = 0; i < n_; ++i) {
    XUPoly lx(n_);
    XUPoly lu(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      lx += XUPoly::x(n_, j) * ParamScalar(a(i, j));
      lu += XUPoly::u(n_, j) * ParamScalar(b(i, j));
    }
    xs.emplace_back(std::move(lx));
    us.emplace_back(std::move(lu));
  }
  XUPoly r(n_);
  for (const auto& [m, c] : terms_) {
    XUPoly t(n_, c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (m.x(i) > 0) t = t * xs[i].get(m.x(i));
      if (m.u(i) > 0) t = t * us[i].get(m.u(i));
    }
    r += t;
  }
  return r;
}

XUPoly XUPoly::evaluate_params(const ParamAssignment& values) const {
  XUPoly r(n_);
  for (const auto& [m, c] : terms_) r.add_term(m, ParamScalar(c.evaluate(values)));
  return r;
}

bool XUPoly::operator==(const XUPoly& other) const {
  if (n_ != other.n_ || terms_.size() != other.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || !(a->second == b->second)) return false;
  return true;
}

}  // namespace symcalc
