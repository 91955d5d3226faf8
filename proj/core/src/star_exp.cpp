#include "symcalc/star_exp.hpp"

#include <algorithm>

#include "symcalc/errors.hpp"

namespace symcalc {

namespace {

void require_order_zero(const WSymbol& p) {
  if (p.order() > 0)
    throw PreconditionError("star-exponential requires a symbol of order <= 0 (a section of W(0)); "
                            "got order " + std::to_string(p.order()));
}

ParamScalar scalar_power(const ParamScalar& c, unsigned k) {
  ParamScalar r(1);
  for (unsigned i = 0; i < k; ++i) r *= c;
  return r;
}

}  // namespace

TWSymbol from_t_graded(std::size_t n, const std::vector<WSymbol>& parts, unsigned max_degree) {
  std::optional<int> floor;
  for (const auto& part : parts)
    if (part.floor()) floor = floor ? std::max(*floor, *part.floor()) : *part.floor();
  TWSymbol f(n, max_degree, 0, {}, PrecisionWindow(floor, static_cast<int>(max_degree)));
  for (unsigned d = 0; d < parts.size() && d <= max_degree; ++d)
    for (const auto& [j, c] : parts[d].coeffs()) f.add_term(j, d, c);
  return f;
}

TWSymbol starexp_series(const WSymbol& p, unsigned max_degree) {
  require_order_zero(p);
  std::vector<WSymbol> parts;
  WSymbol power = WSymbol::constant(p.n(), ParamScalar(1));
  for (unsigned k = 0; k <= max_degree; ++k) {
    if (k > 0) power = star(power, p);
    parts.push_back(power.shifted(static_cast<int>(k)) * ParamScalar(1 / factorial(k)));
  }
  return from_t_graded(p.n(), parts, max_degree);
}

TWSymbol starexp_ode(const WSymbol& p, unsigned max_degree) {
  require_order_zero(p);
  const WSymbol generator = p.shifted(1);
  std::vector<WSymbol> parts{WSymbol::constant(p.n(), ParamScalar(1))};
  for (unsigned d = 0; d < max_degree; ++d)
    parts.push_back(star(generator, parts.back()) * ParamScalar(Rational(1, d + 1)));
  return from_t_graded(p.n(), parts, max_degree);
}

TWSymbol starexp_via_resolvent(const WSymbol& p, unsigned max_degree) {
  require_order_zero(p);
  return laplace(resolvent(p, max_degree), max_degree).with_order(0);
}

ExpRoutes starexp_all_routes(const WSymbol& p, unsigned max_degree) {
  ExpRoutes routes{starexp_series(p, max_degree), starexp_ode(p, max_degree),
                   starexp_via_resolvent(p, max_degree), PrecisionWindow{}, false};
  routes.agree_window = routes.series.window()
                            .intersect(routes.ode.window())
                            .intersect(routes.via_resolvent.window());
  routes.agree = routes.series.agrees_with(routes.ode) &&
                 routes.series.agrees_with(routes.via_resolvent) &&
                 routes.ode.agrees_with(routes.via_resolvent);
  return routes;
}

TWSymbol evolution_residual(const WSymbol& p, const TWSymbol& e) {
  const TWSymbol generator = iota_t(p.shifted(1), e.max_degree());
  TWSymbol rhs = star(generator, e);
  TWSymbol lhs = e.derive_t();
  // Both sides are exact through degree D - 1 only.
  return lhs.with_order(rhs.order()) - rhs;
}

WSymbol oscillator_hamiltonian(const ParamScalar& theta) {
  return WSymbol::from_poly(XUPoly::x(1, 0) * XUPoly::u(1, 0) * theta, 0);
}

TWSymbol oscillator_closed_form(const ParamScalar& theta, unsigned max_degree) {
  const XUPoly xu = XUPoly::x(1, 0) * XUPoly::u(1, 0);
  const int max_key = static_cast<int>(max_degree);
  // y = (e^{theta t} - 1) x u hbar^{-1}; y has t-valuation 1, so D + 1
  // terms of the exponential are exact through t^D.
  BigradedSeries y(1, max_key, max_degree);
  for (unsigned k = 1; k <= max_degree; ++k)
    y.add_term(1, k, xu * (scalar_power(theta, k) * ParamScalar(1 / factorial(k))));
  return exp_series(y, max_degree).to_tw(0);
}

FpiRecord fpi_oscillator(const ParamScalar& theta, unsigned max_degree, int max_key) {
  const XUPoly xu = XUPoly::x(1, 0) * XUPoly::u(1, 0);
  FpiRecord rec;

  // exp(e^{theta t} X) = sum_r e^{r theta t} X^r / r!, X = x u hbar^{-1}.
  rec.expansion = BigradedSeries(1, max_key, max_degree);
  XUPoly xu_power(1, ParamScalar(1));
  for (int r = 0; r <= max_key; ++r) {
    if (r > 0) xu_power = xu_power * xu;
    const ParamScalar rate = theta * ParamScalar(Rational(r));
    for (unsigned d = 0; d <= max_degree; ++d) {
      const ParamScalar c =
          scalar_power(rate, d) * ParamScalar(1 / (factorial(d) * factorial(static_cast<unsigned>(r))));
      rec.expansion.add_term(r, d, xu_power * c);
    }
  }

  BigradedSeries x(1, max_key, max_degree);
  x.add_term(1, 0, xu);
  const BigradedSeries factor = exp_series(x, static_cast<unsigned>(std::max(max_key, 0)));
  const TWSymbol evolution = starexp_series(oscillator_hamiltonian(theta), max_degree);
  rec.product = factor * BigradedSeries::from_tw(evolution, max_key);
  rec.verified = rec.product == rec.expansion;
  return rec;
}

}  // namespace symcalc
