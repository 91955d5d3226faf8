#include "symcalc/w_symbol.hpp"

#include <algorithm>

#include "symcalc/detail/leibniz.hpp"
#include "symcalc/errors.hpp"

namespace symcalc {

WSymbol::WSymbol(std::size_t n, Coeffs coeffs, std::optional<int> floor)
    : n_(n), coeffs_(), floor_(floor) {
  for (auto& [j, c] : coeffs) add_coeff(j, c);
}

WSymbol WSymbol::constant(std::size_t n, const ParamScalar& c) {
  return from_poly(XUPoly(n, c), 0);
}

WSymbol WSymbol::from_poly(const XUPoly& p, int key) {
  WSymbol s(p.n());
  s.add_coeff(key, p);
  return s;
}

WSymbol WSymbol::hbar(std::size_t n, int power) {
  return from_poly(XUPoly(n, ParamScalar(1)), -power);
}

XUPoly WSymbol::coeff(int key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? XUPoly(n_) : it->second;
}

void WSymbol::add_coeff(int key, const XUPoly& c) {
  if (c.n() != n_) throw DimensionMismatch("WSymbol: coefficient has wrong half-dimension");
  if (c.is_zero() || (floor_ && key < *floor_)) return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

int WSymbol::order() const noexcept {
  return coeffs_.empty() ? kOrderMinusInfinity : coeffs_.rbegin()->first;
}

PrincipalSymbol WSymbol::principal_symbol() const {
  if (coeffs_.empty()) return {kOrderMinusInfinity, XUPoly(n_)};
  return {coeffs_.rbegin()->first, coeffs_.rbegin()->second};
}

WSymbol WSymbol::truncated(int floor) const {
  const int f = floor_ ? std::max(*floor_, floor) : floor;
  WSymbol r(n_);
  r.floor_ = f;
  for (auto it = coeffs_.lower_bound(f); it != coeffs_.end(); ++it) r.coeffs_.insert(*it);
  return r;
}

WSymbol WSymbol::shifted(int k) const {
  WSymbol r(n_);
  if (floor_) r.floor_ = *floor_ + k;
  for (const auto& [j, c] : coeffs_) r.coeffs_.emplace(j + k, c);
  return r;
}

namespace {

std::optional<int> merged_floor(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::max(*a, *b);
  return a ? a : b;
}

}  // namespace

WSymbol& WSymbol::operator+=(const WSymbol& other) {
  if (n_ != other.n_) throw DimensionMismatch("WSymbol: half-dimensions differ");
  floor_ = merged_floor(floor_, other.floor_);
  if (floor_) coeffs_.erase(coeffs_.begin(), coeffs_.lower_bound(*floor_));
  for (const auto& [j, c] : other.coeffs_) add_coeff(j, c);
  return *this;
}

WSymbol& WSymbol::operator-=(const WSymbol& other) {
  return *this += -other;
}

WSymbol& WSymbol::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [j, p] : coeffs_) p *= c;
  return *this;
}

WSymbol WSymbol::operator-() const {
  WSymbol r = *this;
  for (auto& [j, p] : r.coeffs_) p = -p;
  return r;
}

bool WSymbol::agrees_with(const WSymbol& other) const {
  if (n_ != other.n_) return false;
  const std::optional<int> f = merged_floor(floor_, other.floor_);
  auto known = [&](int j) { return !f || j >= *f; };
  for (const auto& [j, c] : coeffs_)
    if (known(j) && !(c == other.coeff(j))) return false;
  for (const auto& [j, c] : other.coeffs_)
    if (known(j) && !(c == coeff(j))) return false;
  return true;
}

bool WSymbol::operator==(const WSymbol& other) const {
  return n_ == other.n_ && floor_ == other.floor_ && coeffs_ == other.coeffs_;
}

std::optional<int> product_floor(std::optional<int> floor_p, std::optional<int> top_p,
                                 std::optional<int> floor_q, std::optional<int> top_q) {
  std::optional<int> f;
  if (floor_p && top_q) f = *floor_p + *top_q;
  if (floor_q && top_p) f = f ? std::max(*f, *floor_q + *top_p) : *floor_q + *top_p;
  return f;
}

namespace {

/// Highest level that may be nonzero; nullopt for the exact zero symbol.
std::optional<int> known_top(const WSymbol& s) {
  if (!s.is_zero()) return s.order();
  if (s.floor()) return *s.floor() - 1;
  return std::nullopt;
}

}  // namespace

WSymbol star(const WSymbol& p, const WSymbol& q) {
  if (p.n() != q.n())
    throw DimensionMismatch("star: half-dimensions " + std::to_string(p.n()) + " and " +
                            std::to_string(q.n()) + " differ");
  const auto top_p = known_top(p);
  const auto top_q = known_top(q);
  if (!top_p || !top_q) return WSymbol(p.n());
  const auto floor = product_floor(p.floor(), top_p, q.floor(), top_q);
  auto levels = detail::leibniz_sum(p.coeffs(), q.coeffs(), p.n(),
                                    [](const XUPoly& a, const XUPoly& b) { return a * b; });
  return WSymbol(p.n(), std::move(levels), floor);
}

WSymbol pow_star(const WSymbol& p, unsigned k) {
  WSymbol r = WSymbol::constant(p.n(), ParamScalar(1));
  for (unsigned i = 0; i < k; ++i) r = star(r, p);
  return r;
}

WSymbol commutator(const WSymbol& p, const WSymbol& q) {
  return star(p, q) - star(q, p);
}

WSymbol affine_substitute(const WSymbol& p, const RationalMatrix& a) {
  if (a.size() != p.n()) throw DimensionMismatch("affine_substitute: matrix size differs from n");
  if (a.determinant() == 0) throw SingularMatrix("affine_substitute: matrix is singular");
  WSymbol::Coeffs levels;
  for (const auto& [j, c] : p.coeffs()) levels.emplace(j, c.affine_substitute(a));
  return WSymbol(p.n(), std::move(levels), p.floor());
}

}  // namespace symcalc
