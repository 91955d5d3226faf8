#pragma once

#include <cstdint>
#include <string>
#include <cstddef>
#include <vector>

namespace symcalc {

/// Outcome of one randomized or exhaustive law check.
struct LawResult {
  std::string name;
  unsigned cases = 0;
  unsigned passed = 0;
  std::string message;  // first failure, empty on success
  bool ok() const { return cases > 0 && passed == cases; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;
  bool ok() const;
};

// Algebra laws.
LawResult check_w_associativity(std::uint64_t seed, unsigned cases);
LawResult check_sw_associativity(std::uint64_t seed, unsigned cases);
LawResult check_tw_associativity(std::uint64_t seed, unsigned cases);
LawResult check_unit_laws(std::uint64_t seed, unsigned cases);
/// [u_i, x_j] = delta_ij hbar, [x_i, x_j] = [u_i, u_j] = 0.
LawResult check_canonical_commutators(std::size_t n);
/// res(iota(P)) = P and res_t(iota_t(P)) = P.
LawResult check_res_iota(std::uint64_t seed, unsigned cases);
/// s^{-a-1} * s^{-b-1} = C(a+b, a) s^{-a-b-1} for 0 <= a, b <= max_index.
LawResult check_convolution_basis(unsigned max_index);
LawResult check_affine_covariance(std::uint64_t seed, unsigned cases);
LawResult check_tw_filtration_closure(std::uint64_t seed, unsigned cases);
/// Products of truncated operands agree with the exact product on the
/// claimed exact region, for W, SW and TW.
LawResult check_truncation_soundness(std::uint64_t seed, unsigned cases);

// Star-exponential laws.
LawResult check_route_agreement(std::uint64_t seed, unsigned cases, unsigned max_degree = 4);
/// dE/dt = hbar^{-1} P * E through degree D - 1 and E(0) = 1 for every route.
LawResult check_evolution_law(std::uint64_t seed, unsigned cases, unsigned max_degree = 4);

// Laplace laws.
LawResult check_laplace_morphism(std::uint64_t seed, unsigned cases, unsigned depth = 8,
                                 unsigned max_degree = 8);
LawResult check_laplace_round_trip(std::uint64_t seed, unsigned cases);
LawResult check_inverse_laplace_rejects_violator();

// Gevrey diagnostics.
LawResult check_norm_properties(std::uint64_t seed, unsigned cases);
/// a_j = (1/2)^{-j} (-j)! on j = -8..-1 fits with epsilon exactly 1/2.
LawResult check_gevrey_reference();
/// Star products of Gevrey tails with epsilon_0 keep a fitted epsilon within
/// kClosureFactor * epsilon_0 on a fixed window.
LawResult check_gevrey_closure(std::uint64_t seed, unsigned cases);
inline constexpr int kClosureFactor = 24;
/// Deepening the window never decreases the fitted epsilon.
LawResult check_gevrey_monotonicity(std::uint64_t seed, unsigned cases);
/// ((-j)!)^2 diverges at depth 8; (-j)! and 1 do not.
LawResult check_formal_verdicts();

SuiteReport run_law_suite(std::uint64_t seed, unsigned cases);
SuiteReport run_laplace_suite(std::uint64_t seed, unsigned cases);
SuiteReport run_gevrey_suite(std::uint64_t seed, unsigned cases);

}  // namespace symcalc
