#pragma once

#include "tscalc/scenario.hpp"

namespace tscalc {

/// The six-value table f(0,0)=1/4, f(1,0)=1/5, f(2,0)=1, f(0,1)=1/2, f(1,1)=0,
/// f(2,1)=5 on Z^2 windows {0..3} x {0..2} (unlisted cells 0), with a = 1, so
/// bound values are the bare multiplicative factors.
BoundScenario example31_scenario(Theorem theorem);

struct Example31Factors {
  Scalar in2_at_21;
  Scalar in2_at_32;
  Scalar in6_at_21;
  Scalar in6_at_32;
};

Example31Factors example31_factors();

}  // namespace tscalc
