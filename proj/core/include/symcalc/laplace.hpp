#pragma once

#include "symcalc/sw_symbol.hpp"
#include "symcalc/tw_symbol.hpp"

namespace symcalc {

/// Formal Laplace transform SW -> TW on the basis
///   c s^{-k-1} hbar^{-j}  ->  c t^k / k! hbar^{-(j+k)}.
/// The result carries the input order as its declared order and satisfies
/// the filtration invariant by construction; t-degrees up to
/// min(max_degree, P.depth()) are populated.
TWSymbol laplace(const SWSymbol& p, unsigned max_degree);

/// Inverse of laplace(): c t^k hbar^{-j} -> k! c s^{-k-1} hbar^{-(j-k)}.
/// Throws FiltrationViolation when the input is not a TW section of its
/// declared order.
SWSymbol inverse_laplace(const TWSymbol& f);

}  // namespace symcalc
