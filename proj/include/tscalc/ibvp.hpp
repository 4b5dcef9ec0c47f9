#pragma once

#include <functional>
#include <vector>

#include "tscalc/grid2.hpp"
#include "tscalc/scenario.hpp"

namespace tscalc {

/**
 * The partial delta dynamic equation
 *
 *   d/Delta2 ( d(u^2)/Delta1 ) = F(t1, t2, u),   u^2(t1, 0) = g(t1),  u^2(0, t2) = h(t2)
 *
 * on two discrete windows starting at 0, taken in its integral form
 *
 *   u^2(t1, t2) = g(t1) + h(t2) + sum_{s1<t1} sum_{s2<t2} mu1 mu2 F(s1, s2, u(s1, s2)).
 *
 * All computations run in float mode (square roots).
 */
struct IbvpProblem {
  TimeScale ts1;
  TimeScale ts2;
  std::function<Scalar(const Scalar& t1, const Scalar& t2, const Scalar& u)> F;
  std::function<Scalar(const Scalar& t1)> g;
  std::function<Scalar(const Scalar& t2)> h;

  /// Throws InvalidProblem unless the windows start at 0, g(0) = h(0) = 0 and
  /// g, h are nondecreasing and positive off zero on the windows.
  void validate() const;
};

struct IbvpSolution {
  GridFunction2 u;
  /// Visited states (s1, s2) where F(s1, s2, u) > s2 u beyond tolerance.
  std::vector<GridPoint> hypothesis_failures;

  bool hypothesis_holds() const { return hypothesis_failures.empty(); }
};

/// Solves by the closed recursion and records the F <= t2 u check at every visited state.
IbvpSolution solve_ibvp_recorded(const IbvpProblem& prob);
GridFunction2 solve_ibvp(const IbvpProblem& prob);

/// sqrt(g(t1) + h(t2)) [e_P(t1, 0)]^{1/2} with P(s1) = sum_{s2<t2} mu2 s2 (g(s1) + h(s2))^{-1/2},
/// i.e. the power-type (thm3) majorant for a = g + h, f = t2, p = 2, q = 1. The value
/// at (0, 0) is outside the estimate and is reported as 0.
GridFunction2 estimate_in7(const IbvpProblem& prob);

/// Solution against estimate on the grid minus (0, 0). Throws
/// HypothesisViolated when F exceeded t2 u at some visited state.
OracleResult check_estimate(const IbvpProblem& prob);

}  // namespace tscalc
