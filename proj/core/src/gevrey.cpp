#include "symcalc/gevrey.hpp"

#include <algorithm>

#include "symcalc/errors.hpp"
#include "symcalc/laplace.hpp"

namespace symcalc {

RationalInterval root_interval(const Rational& q, unsigned k, unsigned bits) {
  if (q < 0) throw PreconditionError("root_interval: negative argument");
  if (k == 0) throw PreconditionError("root_interval: zeroth root");
  if (q == 0) return {Rational(0), Rational(0)};
  // q^{1/k} = (num * den^{k-1})^{1/k} / den; scale by 2^bits before rooting.
  Integer den_pow;
  mpz_pow_ui(den_pow.get_mpz_t(), q.get_den_mpz_t(), k - 1);
  Integer scaled = q.get_num() * den_pow;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(bits) * k);
  Integer root;
  const bool exact = mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k) != 0;
  Integer unit = q.get_den();
  mpz_mul_2exp(unit.get_mpz_t(), unit.get_mpz_t(), bits);
  Rational lo(root, unit);
  lo.canonicalize();
  if (exact) return {lo, lo};
  Rational hi(root + 1, unit);
  hi.canonicalize();
  return {lo, hi};
}

Rational coeff_norm(const XUPoly& p, const ParamAssignment& values) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) total += abs(c.evaluate(values));
  return total;
}

GevreyReport fit_gevrey_tail(const std::map<int, XUPoly>& levels, const ParamAssignment& values,
                             const Rational& threshold) {
  if (levels.empty()) throw PreconditionError("fit_gevrey_tail: empty window");
  GevreyReport report;
  report.threshold = threshold;
  report.pass = true;
  for (const auto& [j, p] : levels) {
    if (j >= 0) throw PreconditionError("fit_gevrey_tail: level " + std::to_string(j) + " is not negative");
    const auto k = static_cast<unsigned>(-j);
    GevreyLevel lv;
    lv.level = j;
    lv.norm = coeff_norm(p, values);
    lv.scaled = lv.norm / factorial(k);
    lv.root = root_interval(lv.scaled, k);
    if (lv.scaled > power(threshold, k)) report.pass = false;
    report.levels.push_back(std::move(lv));
  }
  report.fitted_epsilon = report.levels.front().root;
  for (const auto& lv : report.levels) {
    report.fitted_epsilon.lo = std::max(report.fitted_epsilon.lo, lv.root.lo);
    report.fitted_epsilon.hi = std::max(report.fitted_epsilon.hi, lv.root.hi);
  }
  report.fitted_c = 0;
  if (report.fitted_epsilon.hi > 0)
    for (const auto& lv : report.levels) {
      const Rational c = lv.scaled / power(report.fitted_epsilon.hi, static_cast<unsigned>(-lv.level));
      report.fitted_c = std::max(report.fitted_c, c);
    }
  return report;
}

GevreyReport fit_gevrey_tail(const WSymbol& p, const ParamAssignment& values,
                             const Rational& threshold) {
  std::map<int, XUPoly> tail;
  const int lo = p.floor() ? *p.floor() : (p.is_zero() ? -1 : std::min(-1, p.coeffs().begin()->first));
  for (int j = lo; j < 0; ++j) tail.emplace(j, p.coeff(j));
  return fit_gevrey_tail(tail, values, threshold);
}

TwPositiveReport check_tw_positive_part(const TWSymbol& f, const ParamAssignment& values) {
  TwPositiveReport report;
  report.violations = f.filtration_violations();
  report.structural_pass = report.violations.empty();
  report.fitted_r = {Rational(0), Rational(0)};
  for (int j = f.order() + 1; j <= f.order() + static_cast<int>(f.max_degree()); ++j) {
    const auto excess = static_cast<unsigned>(j - f.order());
    if (!f.window().contains(j, excess) || !f.coeffs().contains(j)) continue;
    DecayLevel lv;
    lv.level = j;
    lv.excess = excess;
    lv.weighted = coeff_norm(f.coeff(j, excess), values) * factorial(excess);
    lv.root = root_interval(lv.weighted, excess);
    report.fitted_r.lo = std::max(report.fitted_r.lo, lv.root.lo);
    report.fitted_r.hi = std::max(report.fitted_r.hi, lv.root.hi);
    report.decay.push_back(std::move(lv));
  }
  return report;
}

Rational formal_sequence_value(FormalSequence seq, int j) {
  const auto k = static_cast<unsigned long>(-j);
  switch (seq) {
    case FormalSequence::SquaredFactorial:
      return factorial(k) * factorial(k);
    case FormalSequence::Factorial:
      return factorial(k);
    case FormalSequence::One:
      return 1;
  }
  return 0;
}

std::string to_string(FormalSequence seq) {
  switch (seq) {
    case FormalSequence::SquaredFactorial:
      return "squared-factorial";
    case FormalSequence::Factorial:
      return "factorial";
    case FormalSequence::One:
      return "one";
  }
  return "?";
}

FormalDemoReport formal_counterexample_demo(FormalSequence seq, unsigned depth,
                                            const Rational& threshold) {
  if (depth < 1) throw PreconditionError("formal_counterexample_demo: depth must be >= 1");
  FormalDemoReport report;
  report.sequence = seq;
  report.depth = depth;
  report.threshold = threshold;

  // f(s, hbar) = sum_j c_j hbar^{-j} / (s - 1), 1/(s-1) = sum_k s^{-k-1}.
  const int floor = -static_cast<int>(depth);
  SWSymbol f(0, depth, {}, floor);
  const XUPoly one(0, ParamScalar(1));
  for (int j = floor; j <= 0; ++j)
    for (unsigned k = 0; k <= depth; ++k)
      f.add_term(j, k, one * ParamScalar(formal_sequence_value(seq, j)));
  const TWSymbol image = laplace(f, depth);

  for (unsigned d = 0; d <= depth; ++d) {
    const XUPoly c = image.coeff(0, d);
    report.t_coeffs.push_back(c.is_zero() ? Rational(0) : c.terms().begin()->second.constant_term());
  }
  for (unsigned d = 1; d <= depth; ++d) report.roots.push_back(root_interval(abs(report.t_coeffs[d]), d));

  // r_n < r_{n+1}  <=>  |a_n|^{n+1} < |a_{n+1}|^n.
  bool increasing = true;
  for (unsigned d = std::max(1u, (depth + 1) / 2); d < depth; ++d) {
    const Rational lhs = power(abs(report.t_coeffs[d]), d + 1);
    const Rational rhs = power(abs(report.t_coeffs[d + 1]), d);
    if (!(lhs < rhs)) increasing = false;
  }
  const bool exceeds = abs(report.t_coeffs[depth]) > power(threshold, depth);
  report.divergent = increasing && exceeds;
  return report;
}

}  // namespace symcalc
