#include "bounds_detail.hpp"

namespace tscalc::detail {

Family family_of(Theorem theorem) {
  switch (theorem) {
    case Theorem::Thm1In2:
    case Theorem::Thm1In6:
    case Theorem::BestLinear: return Family::Linear;
    case Theorem::Thm2: return Family::Kernel;
    case Theorem::Thm3: return Family::Power;
    case Theorem::Thm4:
    case Theorem::Cor31: return Family::PowerKernel;
  }
  return Family::Linear;
}

void validate(const BoundScenario& sc, Family family, bool origin_excluded) {
  if (!sc.a.same_grid(sc.f)) throw Error(Errc::GridMismatch, "a and f live on different grids");
  if (sc.a.mode() != sc.mode || sc.f.mode() != sc.mode)
    throw Error(Errc::ModeMismatch, "a and f must use the scenario's numeric mode");
  if (sc.mode == Mode::Exact && !sc.discrete())
    throw Error(Errc::ModeRequired, "sampled scales approximate R and need float mode");

  const bool kernel = family == Family::Kernel || family == Family::PowerKernel;
  const bool power = family == Family::Power || family == Family::PowerKernel;
  if (kernel && !sc.kernel_g) throw Error(Errc::ConfigError, "this bound needs kernel_g");

  if (power) {
    const Exponents e = sc.exps();
    e.validate();
    const mpq_class ap = e.a_power();
    if (sc.mode == Mode::Exact && ap != 0 && ap != -1)
      throw Error(Errc::ModeRequired, "q/p - 1 = " + ap.get_str() + " needs float mode");
    for (std::size_t i = 0; i < sc.a.rows(); ++i)
      for (std::size_t j = 0; j < sc.a.cols(); ++j) {
        if (origin_excluded && i == 0 && j == 0) {
          if (sc.a(i, j).sign() < 0) throw Error(Errc::NonPositiveA, "a(0,0) is negative");
          continue;
        }
        if (sc.a(i, j).sign() <= 0)
          throw Error(Errc::NonPositiveA, "a must be strictly positive for the power bounds");
      }
  }
}

std::vector<Scalar> graininess_vector(const TimeScale& ts, Mode mode) {
  std::vector<Scalar> mu;
  mu.reserve(ts.size() - 1);
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) mu.push_back(ts.graininess_at(k, mode));
  return mu;
}

namespace {

struct KernelScan {
  bool nonnegative = true;
  bool monotone = true;
};

KernelScan scan_kernel(const BoundScenario& sc) {
  const Kernel4& g = *sc.kernel_g;
  const std::size_t n1 = sc.a.rows();
  const std::size_t n2 = sc.a.cols();
  std::vector<KernelScan> rows(n1);
  parallel_for(n1, [&](std::size_t i) {
    KernelScan& r = rows[i];
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k <= i; ++k)
        for (std::size_t l = 0; l <= j; ++l) {
          Scalar v = g(i, j, k, l);
          if (v.sign() < 0) r.nonnegative = false;
          if (i + 1 < n1 && g(i + 1, j, k, l) < v) r.monotone = false;
          if (j + 1 < n2 && g(i, j + 1, k, l) < v) r.monotone = false;
        }
  });
  KernelScan out;
  for (const auto& r : rows) {
    out.nonnegative = out.nonnegative && r.nonnegative;
    out.monotone = out.monotone && r.monotone;
  }
  return out;
}

}  // namespace

std::vector<Hypothesis> scan_hypotheses(const BoundScenario& sc, Family family) {
  const MonotoneFlags af = check_monotone(sc.a);
  const MonotoneFlags ff = check_monotone(sc.f);
  std::vector<Hypothesis> h;
  const bool power = family == Family::Power || family == Family::PowerKernel;
  const bool kernel = family == Family::Kernel || family == Family::PowerKernel;
  if (power)
    h.push_back({"a_positive", af.positive});
  else
    h.push_back({"a_nonnegative", af.nonnegative});
  h.push_back({"a_nondecreasing", af.nondecreasing});
  h.push_back({"f_nonnegative", ff.nonnegative});
  if (kernel) {
    h.push_back({"f_nondecreasing", ff.nondecreasing});
    KernelScan ks = scan_kernel(sc);
    h.push_back({"kernel_nonnegative", ks.nonnegative});
    h.push_back({"kernel_nondecreasing_in_target", ks.monotone});
  }
  return h;
}

Scalar rational_power(const Scalar& x, const mpq_class& e) {
  if (e == 0) return Scalar::one(x.mode());
  if (e == 1) return x;
  if (x.is_exact()) {
    const mpz_class& den = e.get_den();
    const mpz_class& num = e.get_num();
    if (!den.fits_ulong_p() || !num.fits_slong_p())
      throw Error(Errc::DomainError, "exponent too large");
    Scalar r = den == 1 ? x : x.root(den.get_ui());
    return r.pow_int(num.get_si());
  }
  return x.pow(Scalar(e).to_mode(Mode::Float));
}

Matrix<Scalar> power_weight(const GridFunction2& a, const GridFunction2& f, const mpq_class& e) {
  Matrix<Scalar> w(a.rows(), a.cols(), Scalar::zero(a.mode()));
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (!f(k, l).is_zero()) w(k, l) = f(k, l) * rational_power(a(k, l), e);
  return w;
}

Scalar regressive_factor(const Scalar& mu, const Scalar& s, bool& negative) {
  Scalar factor = Scalar::one(s.mode()) + mu * s;
  if (factor.is_zero()) throw Error(Errc::NotRegressive, "1 + mu P vanishes");
  if (factor.sign() < 0) negative = true;
  return factor;
}

Matrix<Scalar> power_combine(const GridFunction2& a, const Matrix<Scalar>& E, const mpq_class& p) {
  mpq_class inv = 1 / p;
  inv.canonicalize();
  Matrix<Scalar> out(E.rows(), E.cols());
  for (std::size_t i = 0; i < E.rows(); ++i)
    for (std::size_t j = 0; j < E.cols(); ++j)
      out(i, j) = rational_power(a(i, j), inv) * rational_power(E(i, j), inv);
  return out;
}

BoundReport make_report(const BoundScenario& sc, Theorem theorem, Matrix<Scalar> values,
                        std::vector<Hypothesis> hypotheses, bool negative_factor) {
  hypotheses.push_back({"positively_regressive", !negative_factor});
  return BoundReport{theorem,
                     sc.mode,
                     !sc.discrete(),
                     GridFunction2(sc.ts1(), sc.ts2(), std::move(values)),
                     std::move(hypotheses),
                     std::nullopt,
                     std::nullopt};
}

}  // namespace tscalc::detail
