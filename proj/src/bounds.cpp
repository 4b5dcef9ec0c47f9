#include "tscalc/bounds.hpp"

#include <vector>

#include "bounds_detail.hpp"

namespace tscalc {

namespace {

using detail::parallel_for;
using detail::regressive_factor;

// E(i,j) = prod_{k<i} (1 + mu1(k) sum_{l<j} mu2(l) w(k,l)), one column per task.
Matrix<Scalar> exp_along_first(const BoundScenario& sc, const Matrix<Scalar>& w, bool& negative) {
  const std::size_t n1 = sc.a.rows();
  const std::size_t n2 = sc.a.cols();
  const auto mu1 = detail::graininess_vector(sc.ts1(), sc.mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), sc.mode);
  Matrix<Scalar> E(n1, n2);
  std::vector<char> neg(n2, 0);
  parallel_for(n2, [&](std::size_t j) {
    bool local = false;
    Scalar running = Scalar::one(sc.mode);
    for (std::size_t i = 0; i < n1; ++i) {
      E(i, j) = running;
      if (i + 1 == n1) break;
      Scalar s = Scalar::zero(sc.mode);
      for (std::size_t l = 0; l < j; ++l) s += mu2[l] * w(i, l);
      running *= regressive_factor(mu1[i], s, local);
    }
    neg[j] = local;
  });
  for (char c : neg) negative = negative || c;
  return E;
}

// E(i,j) = prod_{l<j} (1 + mu2(l) sum_{k<i} mu1(k) w(k,l)), one row per task.
Matrix<Scalar> exp_along_second(const BoundScenario& sc, const Matrix<Scalar>& w, bool& negative) {
  const std::size_t n1 = sc.a.rows();
  const std::size_t n2 = sc.a.cols();
  const auto mu1 = detail::graininess_vector(sc.ts1(), sc.mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), sc.mode);
  Matrix<Scalar> E(n1, n2);
  std::vector<char> neg(n1, 0);
  parallel_for(n1, [&](std::size_t i) {
    bool local = false;
    Scalar running = Scalar::one(sc.mode);
    for (std::size_t j = 0; j < n2; ++j) {
      E(i, j) = running;
      if (j + 1 == n2) break;
      Scalar s = Scalar::zero(sc.mode);
      for (std::size_t k = 0; k < i; ++k) s += mu1[k] * w(k, j);
      running *= regressive_factor(mu2[j], s, local);
    }
    neg[i] = local;
  });
  for (char c : neg) negative = negative || c;
  return E;
}

// Per-target kernel exponential. `apow` is null for thm2 (no a-power factor).
Matrix<Scalar> exp_kernel(const BoundScenario& sc, const Matrix<Scalar>* apow, bool& negative) {
  const std::size_t n1 = sc.a.rows();
  const std::size_t n2 = sc.a.cols();
  const auto mu1 = detail::graininess_vector(sc.ts1(), sc.mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), sc.mode);
  const Kernel4& g = *sc.kernel_g;
  Matrix<Scalar> E(n1, n2);
  std::vector<char> neg(n1 * n2, 0);
  parallel_for(n1 * n2, [&](std::size_t target) {
    const std::size_t i = target / n2;
    const std::size_t j = target % n2;
    const Scalar& fij = sc.f(i, j);
    bool local = false;
    Scalar prod = Scalar::one(sc.mode);
    for (std::size_t k = 0; k < i; ++k) {
      Scalar s = Scalar::zero(sc.mode);
      for (std::size_t l = 0; l < j; ++l) {
        Scalar inner = apow ? (*apow)(k, l) * g(i, j, k, l) : g(i, j, k, l);
        s += mu2[l] * (fij * inner);
      }
      prod *= regressive_factor(mu1[k], s, local);
    }
    E(i, j) = std::move(prod);
    neg[target] = local;
  });
  for (char c : neg) negative = negative || c;
  return E;
}

Matrix<Scalar> times_a(const GridFunction2& a, const Matrix<Scalar>& E) {
  Matrix<Scalar> out(E.rows(), E.cols());
  for (std::size_t i = 0; i < E.rows(); ++i)
    for (std::size_t j = 0; j < E.cols(); ++j) out(i, j) = a(i, j) * E(i, j);
  return out;
}

Matrix<Scalar> a_power_grid(const BoundScenario& sc) {
  const mpq_class e = sc.exps().a_power();
  Matrix<Scalar> out(sc.a.rows(), sc.a.cols());
  for (std::size_t k = 0; k < sc.a.rows(); ++k)
    for (std::size_t l = 0; l < sc.a.cols(); ++l)
      out(k, l) = detail::rational_power(sc.a(k, l), e);
  return out;
}

}  // namespace

BoundReport thm1_bound_in2(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::Linear);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::Linear);
  bool negative = false;
  Matrix<Scalar> E = exp_along_first(sc, sc.f.values(), negative);
  return detail::make_report(sc, Theorem::Thm1In2, times_a(sc.a, E), std::move(hyp), negative);
}

BoundReport thm1_bound_in6(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::Linear);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::Linear);
  bool negative = false;
  Matrix<Scalar> E = exp_along_second(sc, sc.f.values(), negative);
  return detail::make_report(sc, Theorem::Thm1In6, times_a(sc.a, E), std::move(hyp), negative);
}

BoundReport best_linear_bound(const BoundScenario& sc) {
  BoundReport in2 = thm1_bound_in2(sc);
  BoundReport in6 = thm1_bound_in6(sc);
  const std::size_t n1 = sc.a.rows();
  const std::size_t n2 = sc.a.cols();
  Matrix<Scalar> best(n1, n2);
  Matrix<Sharper> table(n1, n2, Sharper::Tie);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const Scalar& x = in2.bounds(i, j);
      const Scalar& y = in6.bounds(i, j);
      if (x < y) {
        best(i, j) = x;
        table(i, j) = Sharper::In2;
      } else {
        best(i, j) = y;
        table(i, j) = y < x ? Sharper::In6 : Sharper::Tie;
      }
    }
  std::vector<Hypothesis> hyp = in2.hypotheses;
  for (std::size_t h = 0; h < hyp.size(); ++h) hyp[h].holds = hyp[h].holds && in6.hypotheses[h].holds;
  BoundReport out{Theorem::BestLinear, sc.mode, in2.approximate,
                  GridFunction2(sc.ts1(), sc.ts2(), std::move(best)), std::move(hyp),
                  std::move(table), std::nullopt};
  return out;
}

BoundReport thm2_bound(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::Kernel);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::Kernel);
  bool negative = false;
  Matrix<Scalar> E = exp_kernel(sc, nullptr, negative);
  return detail::make_report(sc, Theorem::Thm2, times_a(sc.a, E), std::move(hyp), negative);
}

Matrix<Scalar> detail::power_bound_values(const BoundScenario& sc, bool origin_excluded,
                                          bool& negative) {
  detail::validate(sc, detail::Family::Power, origin_excluded);
  const Exponents e = sc.exps();
  Matrix<Scalar> w = detail::power_weight(sc.a, sc.f, e.a_power());
  Matrix<Scalar> E = exp_along_first(sc, w, negative);
  return detail::power_combine(sc.a, E, e.p);
}

BoundReport thm3_bound(const BoundScenario& sc) {
  bool negative = false;
  Matrix<Scalar> values = detail::power_bound_values(sc, false, negative);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::Power);
  return detail::make_report(sc, Theorem::Thm3, std::move(values), std::move(hyp), negative);
}

BoundReport thm4_bound(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::PowerKernel);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::PowerKernel);
  const Matrix<Scalar> apow = a_power_grid(sc);
  bool negative = false;
  Matrix<Scalar> E = exp_kernel(sc, &apow, negative);
  return detail::make_report(sc, Theorem::Thm4, detail::power_combine(sc.a, E, sc.exps().p),
                             std::move(hyp), negative);
}

BoundReport cor31_bound(const BoundScenario& sc) {
  if (sc.ts1().kind() != TimeScale::Kind::Sequence || sc.ts2().kind() != TimeScale::Kind::Sequence)
    throw Error(Errc::WrongScaleKind, "cor31 needs two sequence scales");
  detail::validate(sc, detail::Family::PowerKernel);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::PowerKernel);
  const Matrix<Scalar> apow = a_power_grid(sc);

  std::vector<Scalar> alpha, beta;
  for (const auto& x : sc.ts1().increments()) alpha.push_back(Scalar(x).to_mode(sc.mode));
  for (const auto& x : sc.ts2().increments()) beta.push_back(Scalar(x).to_mode(sc.mode));
  const Kernel4& g = *sc.kernel_g;

  const std::size_t n1 = sc.a.rows();
  const std::size_t n2 = sc.a.cols();
  Matrix<Scalar> E(n1, n2);
  bool negative = false;
  // e(t_i, t_0) = prod_{n=1}^{i} (1 + alpha_n P(t_{n-1})),
  // P(t_{n-1}) = sum_{m=1}^{j} beta_m f(t_i, s_j) a^{q/p-1}(t_{n-1}, s_{m-1}) g(t_i, s_j, t_{n-1}, s_{m-1})
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      Scalar prod = Scalar::one(sc.mode);
      for (std::size_t n = 1; n <= i; ++n) {
        Scalar P = Scalar::zero(sc.mode);
        for (std::size_t m = 1; m <= j; ++m)
          P += beta[m - 1] * (sc.f(i, j) * (apow(n - 1, m - 1) * g(i, j, n - 1, m - 1)));
        prod *= regressive_factor(alpha[n - 1], P, negative);
      }
      E(i, j) = std::move(prod);
    }
  return detail::make_report(sc, Theorem::Cor31, detail::power_combine(sc.a, E, sc.exps().p),
                             std::move(hyp), negative);
}

BoundReport compute_bound(const BoundScenario& sc) {
  switch (sc.theorem) {
    case Theorem::Thm1In2: return thm1_bound_in2(sc);
    case Theorem::Thm1In6: return thm1_bound_in6(sc);
    case Theorem::BestLinear: return best_linear_bound(sc);
    case Theorem::Thm2: return thm2_bound(sc);
    case Theorem::Thm3: return thm3_bound(sc);
    case Theorem::Thm4: return thm4_bound(sc);
    case Theorem::Cor31: return cor31_bound(sc);
  }
  throw Error(Errc::ConfigError, "unhandled theorem");
}

}  // namespace tscalc
