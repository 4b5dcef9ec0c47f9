#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tscalc/scenario.hpp"

namespace tscalc {

/// Relative tolerance for float-mode domination checks.
inline constexpr double kRelativeTolerance = 1e-9;

// The equality case of a premise is its pointwise-largest admissible u. On a
// discrete grid the right-hand side only reads strictly smaller indices in
// both axes, so it is solved by one lexicographic sweep.

/// u(t) = a(t) + sum_{s1<t1} sum_{s2<t2} mu1 mu2 f(s) u(s)
GridFunction2 equality_case_linear(const BoundScenario& sc);
/// u(t)^p = a(t) + sum sum mu1 mu2 f(s) u(s)^q
GridFunction2 equality_case_power(const BoundScenario& sc);
/// u(t)^p = a(t) + f(t) sum sum mu1 mu2 g(t, s) u(s)^q, with p = q = 1 for thm2
GridFunction2 equality_case_kernel(const BoundScenario& sc);
/// The equality case matching sc.theorem.
GridFunction2 equality_case(const BoundScenario& sc);

/// Compares u against the report's bounds at every grid point not in `excluded`.
OracleResult check_domination(const GridFunction2& u, const BoundReport& report,
                              std::span<const GridPoint> excluded = {});

OracleResult check_domination(const GridFunction2& u, const GridFunction2& bounds,
                              std::span<const GridPoint> excluded = {});

/// compute_bound plus, on discrete scales, the equality-case oracle.
BoundReport certify(const BoundScenario& sc);

/// Relative form of a margin: (bound - u) / max(|bound|, |u|), 0 when both vanish.
double relative_margin(const Scalar& bound, const Scalar& u);

/**
 * Seeded random instance satisfying the hypotheses of `theorem`: rationals
 * with numerators 0..9 and denominators 1..9, nondecreasing grids built as
 * two-dimensional prefix sums of nonnegative increments, window sizes in
 * [2, max_window]. Power theorems draw (p, q) from {(2,1), (3,2), (1,1)} and
 * use exact mode only for (1,1).
 */
BoundScenario random_scenario(Theorem theorem, std::uint64_t seed, std::size_t max_window);

struct CampaignSummary {
  std::string theorem;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;  // minimum relative margin over all checks
  std::size_t attained_count = 0;
  std::vector<std::size_t> failed_cases;
};

/// `selector` is a theorem name, or "thm1" for in2, in6 and best-linear together.
CampaignSummary run_campaign(std::string_view selector, std::size_t cases, std::uint64_t seed,
                             std::size_t max_window);

}  // namespace tscalc
