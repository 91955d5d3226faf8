#include "symcalc/sw_symbol.hpp"

#include <algorithm>

#include "symcalc/detail/leibniz.hpp"
#include "symcalc/errors.hpp"

namespace symcalc {

SWSymbol::SWSymbol(std::size_t n, unsigned depth, Coeffs coeffs, std::optional<int> floor)
    : n_(n), depth_(depth), coeffs_(), floor_(floor) {
  for (auto& [j, c] : coeffs) add_coeff(j, c);
}

SLaurent SWSymbol::coeff(int key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? SLaurent(n_, depth_) : it->second;
}

void SWSymbol::add_coeff(int key, const SLaurent& c) {
  if (c.n() != n_) throw DimensionMismatch("SWSymbol: coefficient has wrong half-dimension");
  if (floor_ && key < *floor_) return;
  if (c.depth() < depth_)
    throw DimensionMismatch("SWSymbol: coefficient depth " + std::to_string(c.depth()) +
                            " is below the symbol depth " + std::to_string(depth_));
  SLaurent t = c.truncated(depth_);
  if (t.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(key, t);
  if (!inserted) {
    it->second += t;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

int SWSymbol::order() const noexcept {
  return coeffs_.empty() ? kOrderMinusInfinity : coeffs_.rbegin()->first;
}

XUPoly SWSymbol::coeff(int key, unsigned k) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? XUPoly(n_) : it->second.coeff(k);
}

void SWSymbol::add_term(int key, unsigned k, const XUPoly& c) {
  add_coeff(key, SLaurent::basis(c, k, depth_));
}

SWSymbol SWSymbol::truncated(int floor) const {
  SWSymbol r(n_, depth_);
  r.floor_ = floor_ ? std::max(*floor_, floor) : floor;
  for (auto it = coeffs_.lower_bound(*r.floor_); it != coeffs_.end(); ++it) r.coeffs_.insert(*it);
  return r;
}

SWSymbol SWSymbol::with_depth(unsigned depth) const {
  if (depth > depth_)
    throw PreconditionError("SWSymbol: cannot extend s-depth beyond the known depth");
  SWSymbol r(n_, depth);
  r.floor_ = floor_;
  for (const auto& [j, c] : coeffs_) r.add_coeff(j, c.truncated(depth));
  return r;
}

SWSymbol& SWSymbol::operator+=(const SWSymbol& other) {
  if (n_ != other.n_) throw DimensionMismatch("SWSymbol: half-dimensions differ");
  if (other.depth_ < depth_) *this = with_depth(other.depth_);
  if (other.floor_) {
    floor_ = floor_ ? std::max(*floor_, *other.floor_) : *other.floor_;
    coeffs_.erase(coeffs_.begin(), coeffs_.lower_bound(*floor_));
  }
  for (const auto& [j, c] : other.coeffs_) add_coeff(j, c.truncated(depth_));
  return *this;
}

SWSymbol& SWSymbol::operator-=(const SWSymbol& other) {
  return *this += -other;
}

SWSymbol SWSymbol::operator-() const {
  SWSymbol r = *this;
  for (auto& [j, c] : r.coeffs_) c = -c;
  return r;
}

bool SWSymbol::agrees_with(const SWSymbol& other) const {
  if (n_ != other.n_) return false;
  const unsigned depth = std::min(depth_, other.depth_);
  std::optional<int> f = floor_;
  if (other.floor_) f = f ? std::max(*f, *other.floor_) : *other.floor_;
  auto check = [&](const Coeffs& mine, const SWSymbol& theirs) {
    for (const auto& [j, c] : mine) {
      if (f && j < *f) continue;
      if (!(c.truncated(depth) == theirs.coeff(j).truncated(depth))) return false;
    }
    return true;
  };
  return check(coeffs_, other) && check(other.coeffs_, *this);
}

bool SWSymbol::operator==(const SWSymbol& other) const {
  return n_ == other.n_ && depth_ == other.depth_ && floor_ == other.floor_ &&
         coeffs_ == other.coeffs_;
}

namespace {

std::optional<int> known_top(const SWSymbol& s) {
  if (!s.is_zero()) return s.order();
  if (s.floor()) return *s.floor() - 1;
  return std::nullopt;
}

}  // namespace

SWSymbol star(const SWSymbol& p, const SWSymbol& q) {
  if (p.n() != q.n()) throw DimensionMismatch("star: half-dimensions differ");
  const unsigned depth = std::min(p.depth(), q.depth());
  const auto top_p = known_top(p);
  const auto top_q = known_top(q);
  if (!top_p || !top_q) return SWSymbol(p.n(), depth);
  const auto floor = product_floor(p.floor(), top_p, q.floor(), top_q);
  auto levels = detail::leibniz_sum(p.coeffs(), q.coeffs(), p.n(),
                                    [](const SLaurent& a, const SLaurent& b) {
                                      return convolve(a, b);
                                    });
  return SWSymbol(p.n(), depth, std::move(levels), floor);
}

SWSymbol iota(const WSymbol& p, unsigned depth) {
  SWSymbol r(p.n(), depth, {}, p.floor());
  for (const auto& [j, c] : p.coeffs()) r.add_term(j, 0, c);
  return r;
}

WSymbol res(const SWSymbol& p) {
  WSymbol r(p.n(), {}, p.floor());
  for (const auto& [j, c] : p.coeffs()) r.add_coeff(j, c.residue());
  return r;
}

SWSymbol resolvent(const WSymbol& p, unsigned depth) {
  if (p.order() > 0)
    throw PreconditionError("resolvent: the symbol has order " + std::to_string(p.order()) +
                            "; 1/(s-P) is only developed for P of order <= 0");
  std::optional<int> floor;
  SWSymbol::Coeffs levels;
  WSymbol power = WSymbol::constant(p.n(), ParamScalar(1));
  for (unsigned k = 0; k <= depth; ++k) {
    if (k > 0) power = star(power, p);
    if (power.floor()) floor = floor ? std::max(*floor, *power.floor()) : *power.floor();
    for (const auto& [j, c] : power.coeffs()) {
      auto [it, inserted] = levels.try_emplace(j, SLaurent(p.n(), depth));
      it->second.add_coeff(k, c);
    }
  }
  return SWSymbol(p.n(), depth, std::move(levels), floor);
}

}  // namespace symcalc
