#include "symcalc/tw_symbol.hpp"

#include <algorithm>
#include <limits>

#include "symcalc/detail/leibniz.hpp"
#include "symcalc/errors.hpp"

namespace symcalc {

PrecisionWindow::PrecisionWindow(std::optional<int> floor, int cap, std::map<int, int> overrides)
    : floor_(floor), cap_(std::max(cap, -1)) {
  for (const auto& [level, t] : overrides) {
    if (floor_ && level < *floor_) continue;
    if (t >= cap_) continue;
    if (!floor_) throw PreconditionError("PrecisionWindow: per-level limits require a floor");
    overrides_.emplace(level, std::max(t, -1));
  }
}

int PrecisionWindow::t_exact(int level) const {
  if (floor_ && level < *floor_) return -1;
  auto it = overrides_.find(level);
  return it == overrides_.end() ? cap_ : it->second;
}

PrecisionWindow PrecisionWindow::shifted(int k) const {
  std::map<int, int> moved;
  for (const auto& [level, t] : overrides_) moved.emplace(level + k, t);
  return PrecisionWindow(floor_ ? std::optional<int>(*floor_ + k) : std::nullopt, cap_,
                         std::move(moved));
}

PrecisionWindow PrecisionWindow::intersect(const PrecisionWindow& other) const {
  std::optional<int> floor = floor_;
  if (other.floor_) floor = floor ? std::max(*floor, *other.floor_) : *other.floor_;
  std::map<int, int> merged;
  for (const auto* w : {this, &other})
    for (const auto& [level, t] : w->overrides_)
      merged[level] = std::min(t_exact(level), other.t_exact(level));
  return PrecisionWindow(floor, std::min(cap_, other.cap_), std::move(merged));
}

TWSymbol::TWSymbol(std::size_t n, unsigned max_degree, int order)
    : n_(n), max_degree_(max_degree), order_(order), window_(static_cast<int>(max_degree)) {}

TWSymbol::TWSymbol(std::size_t n, unsigned max_degree, int order, Coeffs coeffs,
                   PrecisionWindow window)
    : n_(n), max_degree_(max_degree), order_(order), coeffs_(std::move(coeffs)),
      window_(std::move(window)) {
  if (window_.cap() > static_cast<int>(max_degree_))
    window_ = PrecisionWindow(window_.floor(), static_cast<int>(max_degree_), window_.overrides());
  for (const auto& [level, p] : coeffs_)
    if (p.n() != n_ || p.max_degree() != max_degree_)
      throw DimensionMismatch("TWSymbol: coefficient does not match (n, D)");
  normalize();
}

void TWSymbol::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    const int t = window_.t_exact(it->first);
    if (t < 0) {
      it = coeffs_.erase(it);
      continue;
    }
    if (t < static_cast<int>(max_degree_)) it->second = it->second.truncated(t);
    if (it->second.is_zero())
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

TPoly TWSymbol::coeff(int level) const {
  auto it = coeffs_.find(level);
  return it == coeffs_.end() ? TPoly(n_, max_degree_) : it->second;
}

XUPoly TWSymbol::coeff(int level, unsigned degree) const {
  auto it = coeffs_.find(level);
  return it == coeffs_.end() ? XUPoly(n_) : it->second.coeff(degree);
}

void TWSymbol::add_term(int level, unsigned degree, const XUPoly& c) {
  if (c.n() != n_) throw DimensionMismatch("TWSymbol: coefficient has wrong half-dimension");
  if (degree > max_degree_ || !window_.contains(level, degree) || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(level, TPoly(n_, max_degree_));
  it->second.add_coeff(degree, c);
  if (it->second.is_zero()) coeffs_.erase(it);
}

bool TWSymbol::known(int level, unsigned degree) const {
  if (degree > max_degree_) return false;
  return window_.contains(level, degree) || static_cast<int>(degree) < level - order_;
}

std::vector<Cell> TWSymbol::filtration_violations() const {
  std::vector<Cell> bad;
  for (auto it = coeffs_.upper_bound(order_); it != coeffs_.end(); ++it)
    for (const auto& [d, c] : it->second.coeffs())
      if (static_cast<int>(d) < it->first - order_) bad.push_back({it->first, d});
  return bad;
}

TWSymbol TWSymbol::shifted(int k) const {
  Coeffs moved;
  for (const auto& [level, p] : coeffs_) moved.emplace(level + k, p);
  return TWSymbol(n_, max_degree_, order_ + k, std::move(moved), window_.shifted(k));
}

TWSymbol TWSymbol::derive_t() const {
  Coeffs derived;
  for (const auto& [level, p] : coeffs_) derived.emplace(level, p.derive_t());
  std::map<int, int> lowered;
  for (const auto& [level, t] : window_.overrides()) lowered.emplace(level, t - 1);
  return TWSymbol(n_, max_degree_, order_ + 1, std::move(derived),
                  PrecisionWindow(window_.floor(), window_.cap() - 1, std::move(lowered)));
}

TWSymbol TWSymbol::with_order(int order) const {
  TWSymbol r = *this;
  r.order_ = order;
  return r;
}

TWSymbol& TWSymbol::operator+=(const TWSymbol& other) {
  if (n_ != other.n_ || max_degree_ != other.max_degree_)
    throw DimensionMismatch("TWSymbol: operands differ in (n, D)");
  order_ = std::max(order_, other.order_);
  window_ = window_.intersect(other.window_);
  for (const auto& [level, p] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(level, p);
    if (!inserted) it->second += p;
  }
  normalize();
  return *this;
}

TWSymbol& TWSymbol::operator-=(const TWSymbol& other) {
  return *this += -other;
}

TWSymbol TWSymbol::operator-() const {
  TWSymbol r = *this;
  for (auto& [level, p] : r.coeffs_) p = -p;
  return r;
}

TWSymbol& TWSymbol::operator*=(const ParamScalar& c) {
  for (auto& [level, p] : coeffs_) p *= c;
  normalize();
  return *this;
}

bool TWSymbol::agrees_with(const TWSymbol& other) const {
  if (n_ != other.n_) return false;
  auto check = [&](const TWSymbol& a, const TWSymbol& b) {
    for (const auto& [level, p] : a.coeffs_) {
      const int t = std::min(a.window_.t_exact(level), b.window_.t_exact(level));
      for (const auto& [d, c] : p.coeffs()) {
        if (static_cast<int>(d) > t) break;
        if (!(c == b.coeff(level, d))) return false;
      }
    }
    return true;
  };
  return check(*this, other) && check(other, *this);
}

bool TWSymbol::operator==(const TWSymbol& other) const {
  return n_ == other.n_ && max_degree_ == other.max_degree_ && order_ == other.order_ &&
         window_ == other.window_ && coeffs_ == other.coeffs_;
}

namespace {

bool stored_zero(const TWSymbol& f, int level, int degree) {
  auto it = f.coeffs().find(level);
  if (it == f.coeffs().end()) return true;
  return it->second.coeffs().find(static_cast<unsigned>(degree)) == it->second.coeffs().end();
}

/// Cell value is a known zero: forced by the filtration or stored as zero
/// inside the window.
bool known_zero(const TWSymbol& f, int level, int degree) {
  if (degree < level - f.order()) return true;
  return f.window().contains(level, static_cast<unsigned>(degree)) &&
         stored_zero(f, level, degree);
}

unsigned max_derivative_order(const TWSymbol& f, const TWSymbol& g) {
  unsigned total = 0;
  for (std::size_t i = 0; i < f.n(); ++i) {
    unsigned du = 0;
    unsigned dx = 0;
    for (const auto& [level, p] : f.coeffs()) du = std::max(du, p.degree_u(i));
    for (const auto& [level, p] : g.coeffs()) dx = std::max(dx, p.degree_x(i));
    total += std::min(du, dx);
  }
  return total;
}

/// Whether output cell (k, d) of f*g depends only on known input cells.
/// Contributions come from f_i at t^a and g_j at t^b with a + b = d and
/// j = k + s - i, s = |alpha|. Pairs outside [k + s - m_g - d, m_f + d]
/// vanish by the filtration invariant of one factor.
bool product_cell_exact(const TWSymbol& f, const TWSymbol& g, unsigned smax, int k, int d) {
  for (int s = 0; s <= static_cast<int>(smax); ++s) {
    for (int i = k + s - g.order() - d; i <= f.order() + d; ++i) {
      const int j = k + s - i;
      for (int a = 0; a <= d; ++a) {
        const int b = d - a;
        if (known_zero(f, i, a) || known_zero(g, j, b)) continue;
        if (!f.known(i, static_cast<unsigned>(a)) || !g.known(j, static_cast<unsigned>(b)))
          return false;
      }
    }
  }
  return true;
}

std::optional<int> irregular_top(const PrecisionWindow& w) {
  if (!w.floor()) return std::nullopt;
  int top = *w.floor();
  if (!w.overrides().empty()) top = std::max(top, w.overrides().rbegin()->first);
  return top;
}

int lowest_level(const TWSymbol& f) {
  if (f.window().floor()) return *f.window().floor();
  return f.coeffs().empty() ? 0 : f.coeffs().begin()->first;
}

}  // namespace

PrecisionWindow product_window(const TWSymbol& f, const TWSymbol& g) {
  const int cap = std::min(f.window().cap(), g.window().cap());
  const auto top_f = irregular_top(f.window());
  const auto top_g = irregular_top(g.window());
  if (!top_f && !top_g) return PrecisionWindow(cap);

  const unsigned smax = max_derivative_order(f, g);
  const int big_d = static_cast<int>(f.max_degree());
  int k_top = std::numeric_limits<int>::min();
  if (top_f) k_top = std::max(k_top, *top_f + g.order());
  if (top_g) k_top = std::max(k_top, *top_g + f.order());
  k_top += big_d + static_cast<int>(smax) + 1;
  const int k_bottom = lowest_level(f) + lowest_level(g) - static_cast<int>(smax) - big_d - 2;

  std::map<int, int> overrides;
  int floor = k_bottom;
  for (int k = k_top; k >= k_bottom; --k) {
    int t = -1;
    while (t < cap && product_cell_exact(f, g, smax, k, t + 1)) ++t;
    if (t < 0) {
      floor = k + 1;
      break;
    }
    if (t < cap) overrides.emplace(k, t);
  }
  return PrecisionWindow(floor, cap, std::move(overrides));
}

TWSymbol star(const TWSymbol& f, const TWSymbol& g) {
  if (f.n() != g.n()) throw DimensionMismatch("star: half-dimensions differ");
  if (f.max_degree() != g.max_degree())
    throw DimensionMismatch("star: t-truncations " + std::to_string(f.max_degree()) + " and " +
                            std::to_string(g.max_degree()) + " differ");
  PrecisionWindow window = product_window(f, g);
  auto levels = detail::leibniz_sum(f.coeffs(), g.coeffs(), f.n(),
                                    [](const TPoly& a, const TPoly& b) { return a * b; });
  return TWSymbol(f.n(), f.max_degree(), f.order() + g.order(), std::move(levels),
                  std::move(window));
}

TWSymbol iota_t(const WSymbol& p, unsigned max_degree) {
  const int order = p.is_zero() ? 0 : p.order();
  TWSymbol::Coeffs levels;
  for (const auto& [j, c] : p.coeffs()) levels.emplace(j, TPoly::constant(c, max_degree));
  return TWSymbol(p.n(), max_degree, order, std::move(levels),
                  PrecisionWindow(p.floor(), static_cast<int>(max_degree)));
}

WSymbol res_t(const TWSymbol& f) {
  WSymbol r(f.n(), {}, f.window().floor());
  for (const auto& [level, p] : f.coeffs()) r.add_coeff(level, p.at_zero());
  return r;
}

}  // namespace symcalc
