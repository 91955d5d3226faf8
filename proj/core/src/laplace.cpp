#include "symcalc/laplace.hpp"

#include <algorithm>

#include "symcalc/errors.hpp"

namespace symcalc {

TWSymbol laplace(const SWSymbol& p, unsigned max_degree) {
  const int cap = static_cast<int>(std::min(max_degree, p.depth()));
  std::map<int, int> ramp;
  if (p.floor())
    for (int t = 0; t < cap; ++t) ramp.emplace(*p.floor() + t, t);
  PrecisionWindow window(p.floor(), cap, std::move(ramp));

  const int order = p.is_zero() ? 0 : p.order();
  TWSymbol::Coeffs levels;
  for (const auto& [j, f] : p.coeffs())
    for (const auto& [k, c] : f.coeffs()) {
      if (static_cast<int>(k) > cap) break;
      auto [it, inserted] = levels.try_emplace(j + static_cast<int>(k), TPoly(p.n(), max_degree));
      it->second.add_coeff(k, c * ParamScalar(1 / factorial(k)));
    }
  return TWSymbol(p.n(), max_degree, order, std::move(levels), std::move(window));
}

namespace {

std::string describe(const Cell& cell, int order) {
  return "coefficient of t^" + std::to_string(cell.degree) + " hbar^" +
         std::to_string(-cell.level) + " is nonzero, but level " + std::to_string(cell.level) +
         " must vanish to order " + std::to_string(cell.level - order) +
         " at t = 0 for declared order " + std::to_string(order);
}

}  // namespace

SWSymbol inverse_laplace(const TWSymbol& f) {
  const auto bad = f.filtration_violations();
  if (!bad.empty()) throw FiltrationViolation("inverse_laplace: " + describe(bad.front(), f.order()));

  const PrecisionWindow& w = f.window();
  const int depth = w.cap();
  if (depth < 0) throw PreconditionError("inverse_laplace: no t-degree of the input is exact");

  // Lowest s-side level whose every depth 0..Ns comes from a known cell.
  std::optional<int> floor;
  if (w.floor()) {
    for (int level = f.order();; --level) {
      bool complete = true;
      for (int k = 0; k <= depth && complete; ++k)
        complete = f.known(level + k, static_cast<unsigned>(k));
      if (!complete) {
        floor = level + 1;
        break;
      }
    }
  }

  SWSymbol r(f.n(), static_cast<unsigned>(depth), {}, floor);
  for (const auto& [level, p] : f.coeffs())
    for (const auto& [k, c] : p.coeffs()) {
      if (static_cast<int>(k) > depth) break;
      r.add_term(level - static_cast<int>(k), k, c * ParamScalar(factorial(k)));
    }
  return r;
}

}  // namespace symcalc
