#pragma once

#include "tscalc/scenario.hpp"

namespace tscalc {

/**
 * Explicit majorants for two-variable Gronwall-Bellman-Bihari inequalities.
 *
 * Every bound is evaluated at every grid point (t1, t2). Hypotheses are
 * scanned, not assumed; a violated hypothesis leaves the values computed but
 * marks the report uncertified. Structural problems (wrong modes, missing
 * kernel, p < q, a <= 0 where a power needs it) throw.
 *
 * The functions in this namespace parallelize over target points with OpenMP.
 * tscalc::reference holds plain serial loops computing the same quantities in
 * the same arithmetic order; the two agree bit for bit in both modes.
 */

/// a(t1,t2) e_P(t1, a1), P(s1) = int_{a2}^{t2} f(s1, s2) Delta s2.
BoundReport thm1_bound_in2(const BoundScenario& sc);
/// a(t1,t2) e_Q(t2, a2), Q(s2) = int_{a1}^{t1} f(s1, s2) Delta s1.
BoundReport thm1_bound_in6(const BoundScenario& sc);
/// Pointwise minimum of the two linear bounds, with a sharpness table.
BoundReport best_linear_bound(const BoundScenario& sc);
/// Kernel bound; the generator is rebuilt for every target point.
BoundReport thm2_bound(const BoundScenario& sc);
BoundReport thm3_bound(const BoundScenario& sc);
BoundReport thm4_bound(const BoundScenario& sc);
/// thm4 on two sequence scales, evaluated through the increments alpha, beta
/// directly (prod (1 + alpha_n P(t_{n-1}))) instead of graininess lookups.
BoundReport cor31_bound(const BoundScenario& sc);

/// Dispatches on sc.theorem.
BoundReport compute_bound(const BoundScenario& sc);

namespace reference {

BoundReport thm1_bound_in2(const BoundScenario& sc);
BoundReport thm1_bound_in6(const BoundScenario& sc);
BoundReport thm2_bound(const BoundScenario& sc);
BoundReport thm3_bound(const BoundScenario& sc);
BoundReport thm4_bound(const BoundScenario& sc);

}  // namespace reference

}  // namespace tscalc
