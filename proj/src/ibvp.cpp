#include "tscalc/ibvp.hpp"

#include <algorithm>
#include <cmath>

#include "bounds_detail.hpp"
#include "tscalc/oracle.hpp"

namespace tscalc {

namespace {

constexpr Mode kMode = Mode::Float;

void check_nondecreasing_positive(const TimeScale& ts, const std::function<Scalar(const Scalar&)>& fn,
                                  const char* name) {
  Scalar prev = fn(ts.point(0, kMode));
  if (!prev.is_zero()) throw Error(Errc::InvalidProblem, std::string(name) + "(0) must be 0");
  for (std::size_t i = 1; i < ts.size(); ++i) {
    Scalar v = fn(ts.point(i, kMode));
    if (v.sign() <= 0)
      throw Error(Errc::InvalidProblem, std::string(name) + " must be positive off zero");
    if (v < prev) throw Error(Errc::InvalidProblem, std::string(name) + " must be nondecreasing");
    prev = v;
  }
}

}  // namespace

void IbvpProblem::validate() const {
  if (!ts1.is_discrete() || !ts2.is_discrete())
    throw Error(Errc::NotDiscrete, "the IBVP is solved on discrete scales only");
  if (ts1.exact_point(0) != 0 || ts2.exact_point(0) != 0)
    throw Error(Errc::InvalidProblem, "both windows must start at 0");
  if (!F || !g || !h) throw Error(Errc::InvalidProblem, "F, g and h must all be given");
  check_nondecreasing_positive(ts1, g, "g");
  check_nondecreasing_positive(ts2, h, "h");
}

IbvpSolution solve_ibvp_recorded(const IbvpProblem& prob) {
  prob.validate();
  const std::size_t n1 = prob.ts1.size();
  const std::size_t n2 = prob.ts2.size();
  const auto mu1 = detail::graininess_vector(prob.ts1, kMode);
  const auto mu2 = detail::graininess_vector(prob.ts2, kMode);
  std::vector<Scalar> p1, p2, gv, hv;
  for (std::size_t i = 0; i < n1; ++i) {
    p1.push_back(prob.ts1.point(i, kMode));
    gv.push_back(prob.g(p1.back()));
  }
  for (std::size_t j = 0; j < n2; ++j) {
    p2.push_back(prob.ts2.point(j, kMode));
    hv.push_back(prob.h(p2.back()));
  }

  Matrix<Scalar> u(n1, n2);
  Matrix<Scalar> Fv(n1, n2, Scalar::zero(kMode));
  std::vector<GridPoint> failures;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      Scalar total = Scalar::zero(kMode);
      for (std::size_t k = 0; k < i; ++k) {
        Scalar inner = Scalar::zero(kMode);
        for (std::size_t l = 0; l < j; ++l) inner += mu2[l] * Fv(k, l);
        total += mu1[k] * inner;
      }
      Scalar radicand = gv[i] + hv[j] + total;
      if (radicand.sign() < 0) throw Error(Errc::NegativeRadicand, "u^2 became negative");
      u(i, j) = radicand.sqrt();

      // F is only ever read at states the recursion has produced.
      Scalar F = prob.F(p1[i], p2[j], u(i, j));
      if (F.sign() < 0) throw Error(Errc::InvalidProblem, "F must be nonnegative");
      const Scalar cap = p2[j] * u(i, j);
      if (relative_margin(cap, F) < -kRelativeTolerance) failures.emplace_back(i, j);
      Fv(i, j) = std::move(F);
    }
  return IbvpSolution{GridFunction2(prob.ts1, prob.ts2, std::move(u)), std::move(failures)};
}

GridFunction2 solve_ibvp(const IbvpProblem& prob) { return solve_ibvp_recorded(prob).u; }

GridFunction2 estimate_in7(const IbvpProblem& prob) {
  prob.validate();
  GridFunction2 a = GridFunction2::from_fn(prob.ts1, prob.ts2, kMode,
                                           [&](const Scalar& t1, const Scalar& t2) {
                                             return prob.g(t1) + prob.h(t2);
                                           });
  GridFunction2 f = GridFunction2::from_fn(prob.ts1, prob.ts2, kMode,
                                           [](const Scalar&, const Scalar& t2) { return t2; });
  BoundScenario sc{std::move(a), std::move(f), std::nullopt, Exponents{2, 1}, Theorem::Thm3,
                   kMode};
  bool negative = false;
  Matrix<Scalar> values = detail::power_bound_values(sc, true, negative);
  return GridFunction2(prob.ts1, prob.ts2, std::move(values));
}

OracleResult check_estimate(const IbvpProblem& prob) {
  IbvpSolution sol = solve_ibvp_recorded(prob);
  if (!sol.hypothesis_holds()) {
    const auto [i, j] = sol.hypothesis_failures.front();
    throw Error(Errc::HypothesisViolated,
                "F(t1,t2,u) > t2 u at window index (" + std::to_string(i) + "," +
                    std::to_string(j) + ") and " +
                    std::to_string(sol.hypothesis_failures.size() - 1) + " other states");
  }
  const GridPoint origin[] = {{0, 0}};
  return check_domination(sol.u, estimate_in7(prob), origin);
}

}  // namespace tscalc
