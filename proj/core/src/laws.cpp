#include "symcalc/laws.hpp"

#include <functional>
#include <optional>
#include <vector>

#include "symcalc/errors.hpp"
#include "symcalc/expr.hpp"
#include "symcalc/gevrey.hpp"
#include "symcalc/laplace.hpp"
#include "symcalc/random.hpp"
#include "symcalc/star_exp.hpp"

namespace symcalc {

namespace {

using Outcome = std::optional<std::string>;

LawResult run_cases(const std::string& name, unsigned cases,
                    const std::function<Outcome(unsigned)>& body) {
  LawResult r{name, cases, 0, ""};
  for (unsigned i = 0; i < cases; ++i) {
    Outcome failure;
    try {
      failure = body(i);
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    if (!failure) {
      ++r.passed;
    } else if (r.message.empty()) {
      r.message = "case " + std::to_string(i) + ": " + *failure;
    }
  }
  return r;
}

Outcome expect(bool condition, const std::string& what) {
  if (condition) return std::nullopt;
  return what;
}

std::size_t dim_for(unsigned i) { return 1 + i % 2; }

WSymbol unit_w(std::size_t n) { return WSymbol::constant(n, ParamScalar(1)); }

// Windowed TW operand: Laplace image of a truncated SW symbol.
TWSymbol windowed_tw(RandomSymbols& rng, std::size_t n, unsigned max_degree) {
  const SWSymbol s = rng.sw_symbol(n, max_degree, -2, 0, 2, 1);
  return laplace(s.truncated(rng.uniform(-2, -1)), max_degree);
}

bool tw_cells_filtered(const TWSymbol& f) {
  for (const auto& [j, p] : f.coeffs())
    if (j > f.order() && static_cast<int>(p.valuation()) < j - f.order()) return false;
  return true;
}

Integer pascal(unsigned n, unsigned k) {
  std::vector<Integer> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, Integer(1));
    for (unsigned c = 1; c < i; ++c) next[c] = row[c - 1] + row[c];
    row = std::move(next);
  }
  return row[k];
}

WSymbol gevrey_tail(RandomSymbols& rng, const Rational& eps, int width) {
  const std::size_t n = 2;
  WSymbol p(n, {}, -width);
  for (int j = -width; j <= 0; ++j) {
    Monomial m(n);
    for (int budget = rng.uniform(0, 2); budget > 0; --budget) {
      const int slot = rng.uniform(0, 3);
      if (slot < 2)
        ++m.x(static_cast<std::size_t>(slot));
      else
        ++m.u(static_cast<std::size_t>(slot - 2));
    }
    const auto k = static_cast<unsigned>(-j);
    p.add_coeff(j, XUPoly::monomial(m, ParamScalar(power(eps, k) * factorial(k))));
  }
  return p;
}

}  // namespace

bool SuiteReport::ok() const {
  for (const auto& law : laws)
    if (!law.ok()) return false;
  return !laws.empty();
}

LawResult check_w_associativity(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("w_star associativity", cases, [&](unsigned i) {
    const std::size_t n = dim_for(i);
    WSymbol p = rng.w_symbol(n, -2, 1, 2);
    WSymbol q = rng.w_symbol(n, -2, 1, 2);
    const WSymbol r = rng.w_symbol(n, -2, 1, 2);
    if (i % 3 == 2) {
      p = p.truncated(-1);
      q = q.truncated(0);
    }
    const WSymbol lhs = star(star(p, q), r);
    const WSymbol rhs = star(p, star(q, r));
    if (i % 3 == 2) return expect(lhs.agrees_with(rhs), "truncated triple disagrees");
    return expect(lhs == rhs, "(P*Q)*R != P*(Q*R): " + render(lhs - rhs));
  });
}

LawResult check_sw_associativity(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("sw_star associativity", cases, [&](unsigned i) {
    const std::size_t n = dim_for(i);
    SWSymbol p = rng.sw_symbol(n, 4, -1, 1, 2, 1);
    const SWSymbol q = rng.sw_symbol(n, 4, -1, 1, 2, 1);
    const SWSymbol r = rng.sw_symbol(n, 4, -1, 1, 2, 1);
    if (i % 3 == 2) p = p.truncated(0);
    const SWSymbol lhs = star(star(p, q), r);
    const SWSymbol rhs = star(p, star(q, r));
    if (i % 3 == 2) return expect(lhs.agrees_with(rhs), "truncated triple disagrees");
    return expect(lhs == rhs, "(f*g)*h != f*(g*h): " + render(lhs - rhs));
  });
}

LawResult check_tw_associativity(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("tw_star associativity", cases, [&](unsigned i) {
    const std::size_t n = dim_for(i);
    const unsigned d = 4;
    const TWSymbol f = i % 3 == 2 ? windowed_tw(rng, n, d) : rng.tw_symbol(n, d, rng.uniform(-1, 1), 1, 2, 1);
    const TWSymbol g = rng.tw_symbol(n, d, rng.uniform(-1, 1), 1, 2, 1);
    const TWSymbol h = rng.tw_symbol(n, d, rng.uniform(-1, 1), 1, 2, 1);
    const TWSymbol lhs = star(star(f, g), h);
    const TWSymbol rhs = star(f, star(g, h));
    if (i % 3 == 2) return expect(lhs.agrees_with(rhs), "windowed triple disagrees");
    return expect(lhs == rhs, "(f*g)*h != f*(g*h): " + render(lhs - rhs));
  });
}

LawResult check_unit_laws(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("unit laws (w, sw, tw)", cases, [&](unsigned i) -> Outcome {
    const std::size_t n = dim_for(i);
    const WSymbol p = rng.w_symbol(n, -2, 1, 2);
    const WSymbol one = unit_w(n);
    if (!(star(one, p) == p && star(p, one) == p)) return "1 is not a two-sided unit in W";
    const SWSymbol f = rng.sw_symbol(n, 4, -1, 1, 2);
    const SWSymbol e = iota(one, 4);
    if (!(star(e, f) == f && star(f, e) == f)) return "1/s is not a two-sided unit in SW";
    const TWSymbol g = rng.tw_symbol(n, 4, rng.uniform(-1, 1), 1, 2);
    const TWSymbol et = iota_t(one, 4);
    if (!(star(et, g) == g && star(g, et) == g)) return "1 is not a two-sided unit in TW";
    return std::nullopt;
  });
}

LawResult check_canonical_commutators(std::size_t n) {
  return run_cases("canonical commutators", static_cast<unsigned>(n * n), [&](unsigned c) -> Outcome {
    const std::size_t i = c / n;
    const std::size_t j = c % n;
    const WSymbol ui = WSymbol::from_poly(XUPoly::u(n, i));
    const WSymbol uj = WSymbol::from_poly(XUPoly::u(n, j));
    const WSymbol xi = WSymbol::from_poly(XUPoly::x(n, i));
    const WSymbol xj = WSymbol::from_poly(XUPoly::x(n, j));
    const WSymbol expected = i == j ? WSymbol::hbar(n, 1) : WSymbol(n);
    const std::string tag = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    if (!(commutator(ui, xj) == expected)) return "[u_i, x_j] wrong at " + tag;
    if (!commutator(xi, xj).is_zero()) return "[x_i, x_j] != 0 at " + tag;
    if (!commutator(ui, uj).is_zero()) return "[u_i, u_j] != 0 at " + tag;
    return std::nullopt;
  });
}

LawResult check_res_iota(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("res o iota = id (s and t)", cases, [&](unsigned i) -> Outcome {
    const WSymbol p = rng.w_symbol(dim_for(i), -2, 1, 2);
    if (!(res(iota(p, 3)) == p)) return "res(iota(P)) != P";
    if (!(res_t(iota_t(p, 4)) == p)) return "res_t(iota_t(P)) != P";
    return std::nullopt;
  });
}

LawResult check_convolution_basis(unsigned max_index) {
  const unsigned side = max_index + 1;
  const unsigned depth = 2 * max_index;
  const XUPoly one(1, ParamScalar(1));
  return run_cases("convolution basis law", side * side, [&](unsigned c) {
    const unsigned a = c / side;
    const unsigned b = c % side;
    const SLaurent got = convolve(SLaurent::basis(one, a, depth), SLaurent::basis(one, b, depth));
    const SLaurent want = SLaurent::basis(XUPoly(1, ParamScalar(Rational(pascal(a + b, a)))), a + b, depth);
    return expect(got == want, "s^-" + std::to_string(a + 1) + " * s^-" + std::to_string(b + 1));
  });
}

LawResult check_affine_covariance(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("affine covariance (n = 2)", cases, [&](unsigned) {
    const WSymbol p = rng.w_symbol(2, -1, 1, 2);
    const WSymbol q = rng.w_symbol(2, -1, 1, 2);
    const RationalMatrix a = rng.invertible_matrix(2);
    const WSymbol lhs = star(affine_substitute(p, a), affine_substitute(q, a));
    return expect(lhs == affine_substitute(star(p, q), a), "subst_A(P)*subst_A(Q) != subst_A(P*Q)");
  });
}

LawResult check_tw_filtration_closure(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("tw_star filtration closure", cases, [&](unsigned i) -> Outcome {
    const std::size_t n = dim_for(i);
    const TWSymbol f = rng.tw_symbol(n, 5, rng.uniform(-2, 2), 2, 2);
    const TWSymbol g = rng.tw_symbol(n, 5, rng.uniform(-2, 2), 2, 2);
    const TWSymbol h = star(f, g);
    if (h.order() != f.order() + g.order()) return "declared order is not additive";
    return expect(tw_cells_filtered(h), "val_t(f_j) < j - m in the product");
  });
}

LawResult check_truncation_soundness(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("truncated products agree with exact products", cases, [&](unsigned i) -> Outcome {
    const std::size_t n = dim_for(i);
    const WSymbol p = rng.w_symbol(n, -3, 1, 2);
    const WSymbol q = rng.w_symbol(n, -3, 1, 2);
    const int fp = rng.uniform(-3, 1);
    const int fq = rng.uniform(-3, 1);
    if (!star(p.truncated(fp), q.truncated(fq)).agrees_with(star(p, q))) return "W product";
    const SWSymbol f = rng.sw_symbol(n, 4, -2, 1, 2, 1);
    const SWSymbol g = rng.sw_symbol(n, 4, -2, 1, 2, 1);
    if (!star(f.truncated(fp), g).agrees_with(star(f, g))) return "SW product";
    const TWSymbol lf = laplace(f, 4);
    const TWSymbol lg = laplace(g, 4);
    if (!star(laplace(f.truncated(fp), 4), laplace(g.truncated(fq), 4)).agrees_with(star(lf, lg)))
      return "TW product";
    return std::nullopt;
  });
}

LawResult check_route_agreement(std::uint64_t seed, unsigned cases, unsigned max_degree) {
  RandomSymbols rng(seed);
  return run_cases("star-exponential route agreement", cases, [&](unsigned i) {
    const WSymbol p = rng.w_symbol(dim_for(i), -2, 0, 2);
    const ExpRoutes routes = starexp_all_routes(p, max_degree);
    return expect(routes.agree, "routes disagree for P = " + render(p));
  });
}

LawResult check_evolution_law(std::uint64_t seed, unsigned cases, unsigned max_degree) {
  RandomSymbols rng(seed);
  return run_cases("evolution law dE/dt = hbar^-1 P * E", cases, [&](unsigned i) -> Outcome {
    const std::size_t n = dim_for(i);
    const WSymbol p = rng.w_symbol(n, -2, 0, 2);
    const ExpRoutes routes = starexp_all_routes(p, max_degree);
    for (const TWSymbol* e : {&routes.series, &routes.ode, &routes.via_resolvent}) {
      const TWSymbol residual = evolution_residual(p, *e);
      if (!residual.is_zero()) return "nonzero residual for P = " + render(p);
      if (max_degree > 0 && residual.window().t_exact(0) < static_cast<int>(max_degree) - 1)
        return "residual window shorter than D - 1";
      if (!(res_t(*e) == unit_w(n))) return "E(0) != 1";
    }
    return std::nullopt;
  });
}

LawResult check_laplace_morphism(std::uint64_t seed, unsigned cases, unsigned depth,
                                 unsigned max_degree) {
  RandomSymbols rng(seed);
  return run_cases("Laplace morphism L(f*g) = L(f)L(g)", cases, [&](unsigned i) {
    const std::size_t n = dim_for(i);
    SWSymbol f = rng.sw_symbol(n, depth, -2, 1, 2, 1);
    const SWSymbol g = rng.sw_symbol(n, depth, -2, 1, 2, 1);
    if (i % 4 == 3) f = f.truncated(-1);
    const TWSymbol lhs = laplace(star(f, g), max_degree);
    const TWSymbol rhs = star(laplace(f, max_degree), laplace(g, max_degree));
    return expect(lhs.agrees_with(rhs), "L(f*g) != L(f)L(g)");
  });
}

LawResult check_laplace_round_trip(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("Laplace round trip", cases, [&](unsigned i) -> Outcome {
    const std::size_t n = dim_for(i);
    const SWSymbol f = rng.sw_symbol(n, 6, -2, 1, 2, 1);
    if (!(inverse_laplace(laplace(f, 6)) == f)) return "inverse_laplace(laplace(f)) != f";
    const SWSymbol ft = f.truncated(-1);
    const SWSymbol back = inverse_laplace(laplace(ft, 6));
    if (!(back.agrees_with(f) && back.floor() == ft.floor())) return "truncated round trip";
    const TWSymbol g = rng.tw_symbol(n, 5, rng.uniform(-1, 1), 2, 2, 1);
    if (!(laplace(inverse_laplace(g), 5).with_order(g.order()) == g))
      return "laplace(inverse_laplace(F)) != F";
    return std::nullopt;
  });
}

LawResult check_inverse_laplace_rejects_violator() {
  return run_cases("inverse_laplace rejects filtration violators", 1, [](unsigned) -> Outcome {
    TWSymbol f(1, 4, 0);
    f.add_term(2, 1, XUPoly::x(1, 0));
    try {
      inverse_laplace(f);
    } catch (const FiltrationViolation&) {
      return std::nullopt;
    }
    return "t*h^-2*x1 with order 0 was accepted";
  });
}

LawResult check_norm_properties(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("coeff_norm sub-additive and sub-multiplicative", cases, [&](unsigned i) {
    const std::size_t n = dim_for(i);
    const XUPoly p = rng.poly(n, 3, 4);
    const XUPoly q = rng.poly(n, 3, 4);
    const bool ok = coeff_norm(p * q) <= coeff_norm(p) * coeff_norm(q) &&
                    coeff_norm(p + q) <= coeff_norm(p) + coeff_norm(q);
    return expect(ok, "norm inequality fails");
  });
}

LawResult check_gevrey_reference() {
  return run_cases("Gevrey fit of (1/2)^{-j} (-j)!", 1, [](unsigned) {
    std::map<int, XUPoly> levels;
    const Rational half(1, 2);
    for (int j = -8; j <= -1; ++j) {
      const auto k = static_cast<unsigned>(-j);
      levels.emplace(j, XUPoly(1, ParamScalar(power(half, k) * factorial(k))));
    }
    const GevreyReport r = fit_gevrey_tail(levels, {}, Rational(1));
    return expect(r.pass && r.fitted_epsilon.lo == half && r.fitted_epsilon.hi == half,
                  "fitted epsilon is not exactly 1/2");
  });
}

LawResult check_gevrey_closure(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  const int width = 6;
  return run_cases("Gevrey closure under w_star", cases, [&](unsigned i) {
    const Rational eps0(1, 2 + i % 3);
    const WSymbol p = gevrey_tail(rng, eps0, width);
    const WSymbol q = gevrey_tail(rng, eps0, width);
    const GevreyReport r = fit_gevrey_tail(star(p, q), {}, eps0 * kClosureFactor);
    return expect(r.pass, "fitted epsilon " + r.fitted_epsilon.hi.get_str() + " exceeds " +
                              std::to_string(kClosureFactor) + " * " + eps0.get_str());
  });
}

LawResult check_gevrey_monotonicity(std::uint64_t seed, unsigned cases) {
  RandomSymbols rng(seed);
  return run_cases("fitted epsilon monotone in the window", cases, [&](unsigned) -> Outcome {
    const WSymbol p = star(gevrey_tail(rng, Rational(1, 2), 6), gevrey_tail(rng, Rational(1, 3), 6));
    std::map<int, XUPoly> window;
    std::optional<RationalInterval> last;
    for (int j = -1; j >= -6; --j) {
      window.emplace(j, p.coeff(j));
      const RationalInterval eps = fit_gevrey_tail(window, {}, Rational(1)).fitted_epsilon;
      if (last && (eps.lo < last->lo || eps.hi < last->hi)) return "fitted epsilon decreased";
      last = eps;
    }
    return std::nullopt;
  });
}

LawResult check_formal_verdicts() {
  return run_cases("formal-case verdicts", 3, [](unsigned i) -> Outcome {
    const FormalSequence seq[] = {FormalSequence::SquaredFactorial, FormalSequence::Factorial,
                                  FormalSequence::One};
    const FormalDemoReport r = formal_counterexample_demo(seq[i], 8);
    if (i == 0) {
      for (unsigned k = 0; k < r.t_coeffs.size(); ++k)
        if (r.t_coeffs[k] != factorial(k)) return "t-coefficients of ((-j)!)^2 are not n!";
      return expect(r.divergent, "((-j)!)^2 not reported divergent");
    }
    return expect(!r.divergent, to_string(seq[i]) + " reported divergent");
  });
}

SuiteReport run_law_suite(std::uint64_t seed, unsigned cases) {
  SuiteReport s{"laws", seed, {}};
  s.laws.push_back(check_w_associativity(seed, cases));
  s.laws.push_back(check_sw_associativity(seed + 1, cases));
  s.laws.push_back(check_tw_associativity(seed + 2, cases));
  s.laws.push_back(check_unit_laws(seed + 3, cases));
  s.laws.push_back(check_canonical_commutators(2));
  s.laws.push_back(check_res_iota(seed + 4, cases));
  s.laws.push_back(check_convolution_basis(10));
  s.laws.push_back(check_affine_covariance(seed + 5, cases));
  s.laws.push_back(check_tw_filtration_closure(seed + 6, cases));
  s.laws.push_back(check_truncation_soundness(seed + 7, cases));
  s.laws.push_back(check_route_agreement(seed + 8, cases));
  s.laws.push_back(check_evolution_law(seed + 9, cases));
  return s;
}

SuiteReport run_laplace_suite(std::uint64_t seed, unsigned cases) {
  SuiteReport s{"laplace", seed, {}};
  s.laws.push_back(check_laplace_morphism(seed, cases));
  s.laws.push_back(check_laplace_round_trip(seed + 1, cases));
  s.laws.push_back(check_inverse_laplace_rejects_violator());
  return s;
}

SuiteReport run_gevrey_suite(std::uint64_t seed, unsigned cases) {
  SuiteReport s{"gevrey", seed, {}};
  s.laws.push_back(check_norm_properties(seed, cases));
  s.laws.push_back(check_gevrey_reference());
  s.laws.push_back(check_gevrey_closure(seed + 1, cases));
  s.laws.push_back(check_gevrey_monotonicity(seed + 2, cases));
  s.laws.push_back(check_formal_verdicts());
  return s;
}

}  // namespace symcalc
