#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "symcalc/param_scalar.hpp"
#include "symcalc/rational.hpp"

namespace symcalc::detail {

/// Calls f(alpha) for every alpha with 0 <= alpha_i <= bounds_i.
template <class F>
void for_each_multi_index(std::span<const unsigned> bounds, F&& f) {
  std::vector<unsigned> alpha(bounds.size(), 0);
  while (true) {
    f(std::span<const unsigned>(alpha));
    std::size_t i = 0;
    while (i < alpha.size() && alpha[i] == bounds[i]) alpha[i++] = 0;
    if (i == alpha.size()) return;
    ++alpha[i];
  }
}

/// The normal-ordered Leibniz sum
///   sum_alpha hbar^{|alpha|}/alpha! * d_u^alpha P (mul) d_x^alpha Q
/// over hbar-graded families of coefficients. Keys follow ord(hbar) = -1,
/// so hbar^{|alpha|} lowers the key by |alpha|. The alpha-range is finite
/// because the coefficients are polynomial in (x, u).
template <class Level, class Mul>
std::map<int, Level> leibniz_sum(const std::map<int, Level>& p, const std::map<int, Level>& q,
                                 std::size_t n, Mul&& mul) {
  std::vector<unsigned> bounds(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned du = 0;
    unsigned dx = 0;
    for (const auto& [j, c] : p) du = std::max(du, c.degree_u(i));
    for (const auto& [j, c] : q) dx = std::max(dx, c.degree_x(i));
    bounds[i] = std::min(du, dx);
  }
  const std::vector<unsigned> zero(n, 0);

  std::map<int, Level> out;
  for_each_multi_index(bounds, [&](std::span<const unsigned> alpha) {
    unsigned order = 0;
    Integer alpha_factorial = 1;
    for (unsigned a : alpha) {
      order += a;
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), a);
      alpha_factorial *= f;
    }
    const ParamScalar weight(Rational(Integer(1), alpha_factorial));

    std::map<int, Level> dp;
    std::map<int, Level> dq;
    for (const auto& [j, c] : p) {
      Level d = c.derive(alpha, zero);
      if (!d.is_zero()) dp.emplace(j, std::move(d));
    }
    for (const auto& [j, c] : q) {
      Level d = c.derive(zero, alpha);
      if (!d.is_zero()) dq.emplace(j, std::move(d));
    }
    for (const auto& [i, a] : dp)
      for (const auto& [j, b] : dq) {
        Level term = mul(a, b);
        if (term.is_zero()) continue;
        term *= weight;
        const int key = i + j - static_cast<int>(order);
        auto [it, inserted] = out.try_emplace(key, std::move(term));
        if (!inserted) {
          it->second += term;
          if (it->second.is_zero()) out.erase(it);
        }
      }
  });
  return out;
}

}  // namespace symcalc::detail
