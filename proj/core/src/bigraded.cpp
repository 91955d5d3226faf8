#include "symcalc/bigraded.hpp"

#include "symcalc/errors.hpp"

namespace symcalc {

BigradedSeries BigradedSeries::from_tw(const TWSymbol& f, int max_key) {
  BigradedSeries s(f.n(), max_key, f.max_degree());
  for (const auto& [level, p] : f.coeffs())
    for (const auto& [d, c] : p.coeffs()) s.add_term(level, d, c);
  return s;
}

XUPoly BigradedSeries::coeff(int key, unsigned degree) const {
  auto it = coeffs_.find({key, degree});
  return it == coeffs_.end() ? XUPoly(n_) : it->second;
}

void BigradedSeries::add_term(int key, unsigned degree, const XUPoly& c) {
  if (c.n() != n_) throw DimensionMismatch("BigradedSeries: coefficient has wrong half-dimension");
  if (key > max_key_ || degree > max_degree_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace({key, degree}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

BigradedSeries& BigradedSeries::operator+=(const BigradedSeries& other) {
  if (n_ != other.n_) throw DimensionMismatch("BigradedSeries: half-dimensions differ");
  for (const auto& [key, c] : other.coeffs_) add_term(key.first, key.second, c);
  return *this;
}

BigradedSeries& BigradedSeries::operator*=(const ParamScalar& c) {
  if (c.is_zero()) coeffs_.clear();
  for (auto& [key, p] : coeffs_) p *= c;
  return *this;
}

BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("BigradedSeries: half-dimensions differ");
  BigradedSeries r(a.n_, std::min(a.max_key_, b.max_key_), std::min(a.max_degree_, b.max_degree_));
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

TWSymbol BigradedSeries::to_tw(int order) const {
  TWSymbol f(n_, max_degree_, order);
  for (const auto& [key, c] : coeffs_) f.add_term(key.first, key.second, c);
  return f;
}

bool BigradedSeries::operator==(const BigradedSeries& other) const {
  return n_ == other.n_ && max_key_ == other.max_key_ && max_degree_ == other.max_degree_ &&
         coeffs_ == other.coeffs_;
}

BigradedSeries exp_series(const BigradedSeries& y, unsigned terms) {
  BigradedSeries total(y.n(), y.max_key(), y.max_degree());
  BigradedSeries power(y.n(), y.max_key(), y.max_degree());
  power.add_term(0, 0, XUPoly(y.n(), ParamScalar(1)));
  for (unsigned r = 0; r <= terms; ++r) {
    if (r > 0) {
      power = power * y;
      power *= ParamScalar(Rational(1, r));
    }
    total += power;
  }
  return total;
}

}  // namespace symcalc
