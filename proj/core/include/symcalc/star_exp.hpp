#pragma once

#include <string>
#include <vector>

#include "symcalc/bigraded.hpp"
#include "symcalc/laplace.hpp"

namespace symcalc {

/// exp(t hbar^{-1} P) truncated at t-degree D, three ways. Each requires
/// ord(P) <= 0 and throws PreconditionError otherwise. The results are TW
/// symbols of declared order 0.

/// sum_{k<=D} t^k hbar^{-k} P^{*k} / k!.
TWSymbol starexp_series(const WSymbol& p, unsigned max_degree);
/// Degree-by-degree solution of dE/dt = hbar^{-1} P * E with E(0) = 1:
/// E_0 = 1, (d+1) E_{d+1} = hbar^{-1} P * E_d.
TWSymbol starexp_ode(const WSymbol& p, unsigned max_degree);
/// Laplace image of the resolvent 1/(s - P) developed to s-depth D.
TWSymbol starexp_via_resolvent(const WSymbol& p, unsigned max_degree);

struct ExpRoutes {
  TWSymbol series;
  TWSymbol ode;
  TWSymbol via_resolvent;
  PrecisionWindow agree_window;
  bool agree = false;
};

ExpRoutes starexp_all_routes(const WSymbol& p, unsigned max_degree);

/// Builds the TW symbol with t^d-part parts[d]; declared order 0.
TWSymbol from_t_graded(std::size_t n, const std::vector<WSymbol>& parts, unsigned max_degree);

/// Residual dE/dt - hbar^{-1} P * E; zero through t-degree D - 1 for every
/// route's output.
TWSymbol evolution_residual(const WSymbol& p, const TWSymbol& e);

/// Taylor expansion in t of exp((e^{theta t} - 1) x1 u1 hbar^{-1}), n = 1,
/// computed with plain series arithmetic (no star products).
TWSymbol oscillator_closed_form(const ParamScalar& theta, unsigned max_degree);

/// theta x1 u1 as a W symbol.
WSymbol oscillator_hamiltonian(const ParamScalar& theta);

struct FpiRecord {
  /// Direct expansion of exp(e^{theta t} x1 u1 hbar^{-1}).
  BigradedSeries expansion;
  /// exp(x1 u1 hbar^{-1}) times the star-exponential of theta x1 u1.
  BigradedSeries product;
  bool verified = false;
};

/// The path-integral series of the oscillator, through t-degree D and
/// hbar-key max_key. It is not a TW symbol: t-constant terms appear at
/// every positive hbar^{-1} power.
FpiRecord fpi_oscillator(const ParamScalar& theta, unsigned max_degree, int max_key);

}  // namespace symcalc
