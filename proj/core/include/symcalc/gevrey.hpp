#pragma once

#include <map>
#include <string>
#include <vector>

#include "symcalc/tw_symbol.hpp"
#include "symcalc/w_symbol.hpp"

namespace symcalc {

/// Rational enclosure lo <= value <= hi; lo == hi when the value is exact.
struct RationalInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Encloses q^{1/k} (q >= 0, k >= 1) with width at most 2^-bits / den(q).
RationalInterval root_interval(const Rational& q, unsigned k, unsigned bits = 48);

/// Sum of |coefficients| after substituting the parameters: an upper bound
/// for the sup of |p| over the closed unit polydisc. Subadditive and
/// submultiplicative.
Rational coeff_norm(const XUPoly& p, const ParamAssignment& values = {});

/// Description of the norm, repeated in every report.
inline constexpr const char* kNormDescription =
    "sum of absolute coefficients (bound for the sup over the closed unit polydisc)";

struct GevreyLevel {
  int level = 0;                // j < 0
  Rational norm;                // |a_j|
  Rational scaled;              // |a_j| / (-j)!
  RationalInterval root;        // r_j = (|a_j| / (-j)!)^{1/(-j)}
};

/// Fit of |a_j| <= C eps^{-j} (-j)! over a finite window of negative levels.
struct GevreyReport {
  std::vector<GevreyLevel> levels;
  RationalInterval fitted_epsilon;  // sup_j r_j
  Rational fitted_c;                // max_j scaled_j / eps_hi^{-j}
  Rational threshold;
  bool pass = false;                // every r_j <= threshold
};

GevreyReport fit_gevrey_tail(const std::map<int, XUPoly>& levels, const ParamAssignment& values,
                             const Rational& threshold);
/// Uses the levels j < 0 of p that are exactly known.
GevreyReport fit_gevrey_tail(const WSymbol& p, const ParamAssignment& values,
                             const Rational& threshold);

struct DecayLevel {
  int level = 0;
  unsigned excess = 0;          // j - m
  Rational weighted;            // |[t^{j-m}] f_j| * (j-m)!
  RationalInterval root;        // weighted^{1/(j-m)}
};

/// Positive-part check of a TW symbol: the exact vanishing condition plus a
/// fit of |[t^{j-m}] f_j| (j-m)! <= M R^{j-m} with M = 1.
struct TwPositiveReport {
  bool structural_pass = false;
  std::vector<Cell> violations;
  std::vector<DecayLevel> decay;
  RationalInterval fitted_r;
  Rational m_constant = 1;
};

TwPositiveReport check_tw_positive_part(const TWSymbol& f, const ParamAssignment& values = {});

/// Coefficient sequences for the formal-case demonstration.
enum class FormalSequence {
  SquaredFactorial,  // c_j = ((-j)!)^2, outside the Gevrey class
  Factorial,         // c_j = (-j)!
  One,               // c_j = 1
};

Rational formal_sequence_value(FormalSequence seq, int j);
std::string to_string(FormalSequence seq);

struct FormalDemoReport {
  FormalSequence sequence = FormalSequence::SquaredFactorial;
  unsigned depth = 0;
  std::vector<Rational> t_coeffs;          // a_n = c_{-n} / n!, n = 0..depth
  std::vector<RationalInterval> roots;     // |a_n|^{1/n}, n = 1..depth
  Rational threshold;
  bool divergent = false;
};

/// Laplace transform of sum_j c_j hbar^{-j} / (s - 1) for j in [-depth, 0],
/// read off at hbar^0, followed by a root test on the resulting t-series.
/// The verdict is "divergent" when the root-test values strictly increase
/// over the upper half of the window and the last one exceeds `threshold`.
FormalDemoReport formal_counterexample_demo(FormalSequence seq, unsigned depth,
                                            const Rational& threshold = 2);

}  // namespace symcalc
