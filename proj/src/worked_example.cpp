#include "tscalc/worked_example.hpp"

#include "tscalc/bounds.hpp"

namespace tscalc {

BoundScenario example31_scenario(Theorem theorem) {
  const TimeScale ts1 = TimeScale::integers(1, 0, 3);
  const TimeScale ts2 = TimeScale::integers(1, 0, 2);
  Matrix<Scalar> f(4, 3, Scalar::exact(0));
  f(0, 0) = Scalar::exact(1, 4);
  f(1, 0) = Scalar::exact(1, 5);
  f(2, 0) = Scalar::exact(1);
  f(0, 1) = Scalar::exact(1, 2);
  f(1, 1) = Scalar::exact(0);
  f(2, 1) = Scalar::exact(5);
  return BoundScenario{GridFunction2::constant(ts1, ts2, Scalar::exact(1)),
                       GridFunction2(ts1, ts2, std::move(f)),
                       std::nullopt,
                       std::nullopt,
                       theorem,
                       Mode::Exact};
}

Example31Factors example31_factors() {
  const BoundReport in2 = thm1_bound_in2(example31_scenario(Theorem::Thm1In2));
  const BoundReport in6 = thm1_bound_in6(example31_scenario(Theorem::Thm1In6));
  return {in2.bounds(2, 1), in2.bounds(3, 2), in6.bounds(2, 1), in6.bounds(3, 2)};
}

}  // namespace tscalc
