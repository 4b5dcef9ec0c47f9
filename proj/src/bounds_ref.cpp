// Serial reference for the parallel bounds: every target point is evaluated
// from scratch by the literal nested sums and products.

#include "bounds_detail.hpp"

namespace tscalc::reference {

namespace {

using detail::regressive_factor;

Matrix<Scalar> literal_in2(const BoundScenario& sc, const Matrix<Scalar>& w, bool& negative) {
  const auto mu1 = detail::graininess_vector(sc.ts1(), sc.mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), sc.mode);
  Matrix<Scalar> E(sc.a.rows(), sc.a.cols());
  for (std::size_t i = 0; i < sc.a.rows(); ++i)
    for (std::size_t j = 0; j < sc.a.cols(); ++j) {
      Scalar prod = Scalar::one(sc.mode);
      for (std::size_t k = 0; k < i; ++k) {
        Scalar s = Scalar::zero(sc.mode);
        for (std::size_t l = 0; l < j; ++l) s += mu2[l] * w(k, l);
        prod *= regressive_factor(mu1[k], s, negative);
      }
      E(i, j) = prod;
    }
  return E;
}

Matrix<Scalar> literal_kernel(const BoundScenario& sc, bool with_apow, bool& negative) {
  const auto mu1 = detail::graininess_vector(sc.ts1(), sc.mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), sc.mode);
  const mpq_class e = sc.exps().a_power();
  const Kernel4& g = *sc.kernel_g;
  Matrix<Scalar> E(sc.a.rows(), sc.a.cols());
  for (std::size_t i = 0; i < sc.a.rows(); ++i)
    for (std::size_t j = 0; j < sc.a.cols(); ++j) {
      Scalar prod = Scalar::one(sc.mode);
      for (std::size_t k = 0; k < i; ++k) {
        Scalar s = Scalar::zero(sc.mode);
        for (std::size_t l = 0; l < j; ++l) {
          Scalar inner = with_apow ? detail::rational_power(sc.a(k, l), e) * g(i, j, k, l)
                                   : g(i, j, k, l);
          s += mu2[l] * (sc.f(i, j) * inner);
        }
        prod *= regressive_factor(mu1[k], s, negative);
      }
      E(i, j) = prod;
    }
  return E;
}

Matrix<Scalar> times_a(const GridFunction2& a, const Matrix<Scalar>& E) {
  Matrix<Scalar> out(E.rows(), E.cols());
  for (std::size_t i = 0; i < E.rows(); ++i)
    for (std::size_t j = 0; j < E.cols(); ++j) out(i, j) = a(i, j) * E(i, j);
  return out;
}

}  // namespace

BoundReport thm1_bound_in2(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::Linear);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::Linear);
  bool negative = false;
  Matrix<Scalar> E = literal_in2(sc, sc.f.values(), negative);
  return detail::make_report(sc, Theorem::Thm1In2, times_a(sc.a, E), std::move(hyp), negative);
}

BoundReport thm1_bound_in6(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::Linear);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::Linear);
  const auto mu1 = detail::graininess_vector(sc.ts1(), sc.mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), sc.mode);
  bool negative = false;
  Matrix<Scalar> B(sc.a.rows(), sc.a.cols());
  for (std::size_t i = 0; i < sc.a.rows(); ++i)
    for (std::size_t j = 0; j < sc.a.cols(); ++j) {
      Scalar prod = Scalar::one(sc.mode);
      for (std::size_t l = 0; l < j; ++l) {
        Scalar s = Scalar::zero(sc.mode);
        for (std::size_t k = 0; k < i; ++k) s += mu1[k] * sc.f(k, l);
        prod *= regressive_factor(mu2[l], s, negative);
      }
      B(i, j) = sc.a(i, j) * prod;
    }
  return detail::make_report(sc, Theorem::Thm1In6, std::move(B), std::move(hyp), negative);
}

BoundReport thm2_bound(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::Kernel);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::Kernel);
  bool negative = false;
  Matrix<Scalar> E = literal_kernel(sc, false, negative);
  return detail::make_report(sc, Theorem::Thm2, times_a(sc.a, E), std::move(hyp), negative);
}

BoundReport thm3_bound(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::Power);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::Power);
  const Exponents e = sc.exps();
  bool negative = false;
  Matrix<Scalar> E = literal_in2(sc, detail::power_weight(sc.a, sc.f, e.a_power()), negative);
  return detail::make_report(sc, Theorem::Thm3, detail::power_combine(sc.a, E, e.p),
                             std::move(hyp), negative);
}

BoundReport thm4_bound(const BoundScenario& sc) {
  detail::validate(sc, detail::Family::PowerKernel);
  auto hyp = detail::scan_hypotheses(sc, detail::Family::PowerKernel);
  bool negative = false;
  Matrix<Scalar> E = literal_kernel(sc, true, negative);
  return detail::make_report(sc, Theorem::Thm4, detail::power_combine(sc.a, E, sc.exps().p),
                             std::move(hyp), negative);
}

}  // namespace tscalc::reference
