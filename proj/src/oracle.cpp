#include "tscalc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>

#include "bounds_detail.hpp"
#include "tscalc/bounds.hpp"

namespace tscalc {

namespace {

void require_discrete(const BoundScenario& sc) {
  if (!sc.discrete()) throw Error(Errc::NotDiscrete, "the oracle needs discrete scales");
  if (!sc.a.same_grid(sc.f)) throw Error(Errc::GridMismatch, "a and f live on different grids");
}

void require_positive_a(const BoundScenario& sc) {
  if (!check_monotone(sc.a).positive)
    throw Error(Errc::NonPositiveA, "power premises need a > 0");
}

}  // namespace

GridFunction2 equality_case_linear(const BoundScenario& sc) {
  require_discrete(sc);
  const Mode mode = sc.a.mode();
  const auto mu1 = detail::graininess_vector(sc.ts1(), mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), mode);
  Matrix<Scalar> u(sc.a.rows(), sc.a.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      Scalar total = Scalar::zero(mode);
      for (std::size_t k = 0; k < i; ++k) {
        Scalar inner = Scalar::zero(mode);
        for (std::size_t l = 0; l < j; ++l) inner += mu2[l] * sc.f(k, l) * u(k, l);
        total += mu1[k] * inner;
      }
      u(i, j) = sc.a(i, j) + total;
    }
  return GridFunction2(sc.ts1(), sc.ts2(), std::move(u));
}

GridFunction2 equality_case_power(const BoundScenario& sc) {
  require_discrete(sc);
  require_positive_a(sc);
  const Exponents e = sc.exps();
  e.validate();
  mpq_class inv_p = 1 / e.p;
  inv_p.canonicalize();
  const Mode mode = sc.a.mode();
  const auto mu1 = detail::graininess_vector(sc.ts1(), mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), mode);
  Matrix<Scalar> u(sc.a.rows(), sc.a.cols());
  Matrix<Scalar> uq(sc.a.rows(), sc.a.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      Scalar total = Scalar::zero(mode);
      for (std::size_t k = 0; k < i; ++k) {
        Scalar inner = Scalar::zero(mode);
        for (std::size_t l = 0; l < j; ++l) inner += mu2[l] * sc.f(k, l) * uq(k, l);
        total += mu1[k] * inner;
      }
      u(i, j) = detail::rational_power(sc.a(i, j) + total, inv_p);
      uq(i, j) = detail::rational_power(u(i, j), e.q);
    }
  return GridFunction2(sc.ts1(), sc.ts2(), std::move(u));
}

GridFunction2 equality_case_kernel(const BoundScenario& sc) {
  require_discrete(sc);
  if (!sc.kernel_g) throw Error(Errc::ConfigError, "kernel oracle needs kernel_g");
  const bool power = detail::family_of(sc.theorem) == detail::Family::PowerKernel;
  const Exponents e = power ? sc.exps() : Exponents{};
  e.validate();
  if (power) require_positive_a(sc);
  mpq_class inv_p = 1 / e.p;
  inv_p.canonicalize();
  const Mode mode = sc.a.mode();
  const auto mu1 = detail::graininess_vector(sc.ts1(), mode);
  const auto mu2 = detail::graininess_vector(sc.ts2(), mode);
  const Kernel4& g = *sc.kernel_g;
  Matrix<Scalar> u(sc.a.rows(), sc.a.cols());
  Matrix<Scalar> uq(sc.a.rows(), sc.a.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      Scalar total = Scalar::zero(mode);
      for (std::size_t k = 0; k < i; ++k) {
        Scalar inner = Scalar::zero(mode);
        for (std::size_t l = 0; l < j; ++l) inner += mu2[l] * g(i, j, k, l) * uq(k, l);
        total += mu1[k] * inner;
      }
      u(i, j) = detail::rational_power(sc.a(i, j) + sc.f(i, j) * total, inv_p);
      uq(i, j) = detail::rational_power(u(i, j), e.q);
    }
  return GridFunction2(sc.ts1(), sc.ts2(), std::move(u));
}

GridFunction2 equality_case(const BoundScenario& sc) {
  switch (detail::family_of(sc.theorem)) {
    case detail::Family::Linear: return equality_case_linear(sc);
    case detail::Family::Power: return equality_case_power(sc);
    case detail::Family::Kernel:
    case detail::Family::PowerKernel: return equality_case_kernel(sc);
  }
  throw Error(Errc::ConfigError, "unhandled theorem");
}

double relative_margin(const Scalar& bound, const Scalar& u) {
  const double b = bound.to_double();
  const double v = u.to_double();
  const double scale = std::max(std::fabs(b), std::fabs(v));
  if (scale == 0.0) return 0.0;
  if (bound.is_exact()) return (bound - u).to_double() / scale;
  return (b - v) / scale;
}

OracleResult check_domination(const GridFunction2& u, const BoundReport& report,
                              std::span<const GridPoint> excluded) {
  return check_domination(u, report.bounds, excluded);
}

OracleResult check_domination(const GridFunction2& u, const GridFunction2& B,
                              std::span<const GridPoint> excluded) {
  if (!u.same_grid(B) || u.mode() != B.mode())
    throw Error(Errc::GridMismatch, "solution and bound grids differ");
  const bool exact = B.mode() == Mode::Exact;
  OracleResult out{u, true, Scalar::zero(B.mode()), {}, {}, 0.0};
  bool first = true;
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (std::find(excluded.begin(), excluded.end(), GridPoint{i, j}) != excluded.end()) continue;
      const double rel = relative_margin(B(i, j), u(i, j));
      Scalar margin = exact ? B(i, j) - u(i, j) : Scalar(rel);
      const bool ok = exact ? margin.sign() >= 0 : rel >= -kRelativeTolerance;
      const bool attained = exact ? margin.is_zero() : std::fabs(rel) <= kRelativeTolerance;
      if (!ok) {
        out.dominated = false;
        out.violations.emplace_back(i, j);
      }
      if (attained) out.attained_points.emplace_back(i, j);
      if (first || margin < out.worst_margin) out.worst_margin = margin;
      if (first || rel < out.worst_relative_margin) out.worst_relative_margin = rel;
      first = false;
    }
  return out;
}

BoundReport certify(const BoundScenario& sc) {
  BoundReport report = compute_bound(sc);
  if (sc.discrete()) report.oracle = check_domination(equality_case(sc), report);
  return report;
}

namespace {

class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  mpq_class draw(long min_num = 0) {
    std::uniform_int_distribution<long> num(min_num, 9);
    std::uniform_int_distribution<long> den(1, 9);
    mpq_class q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  std::size_t size(std::size_t max_window) {
    std::uniform_int_distribution<std::size_t> d(2, std::max<std::size_t>(2, max_window));
    return d(rng_);
  }

  std::size_t pick(std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    return d(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

Matrix<mpq_class> random_table(RationalSource& src, std::size_t n1, std::size_t n2) {
  Matrix<mpq_class> m(n1, n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) m(i, j) = src.draw();
  return m;
}

// base + 2-D prefix sums of nonnegative increments: nondecreasing in each index.
Matrix<mpq_class> nondecreasing_table(RationalSource& src, std::size_t n1, std::size_t n2,
                                      const mpq_class& base) {
  Matrix<mpq_class> inc = random_table(src, n1, n2);
  Matrix<mpq_class> m(n1, n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      mpq_class v = inc(i, j);
      if (i > 0) v += m(i - 1, j);
      if (j > 0) v += m(i, j - 1);
      if (i > 0 && j > 0) v -= m(i - 1, j - 1);
      m(i, j) = v;
    }
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) m(i, j) += base;
  return m;
}

GridFunction2 to_grid(const TimeScale& ts1, const TimeScale& ts2, const Matrix<mpq_class>& m,
                      Mode mode) {
  Matrix<Scalar> v(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i, j) = Scalar(m(i, j)).to_mode(mode);
  return GridFunction2(ts1, ts2, std::move(v));
}

TimeScale random_sequence(RationalSource& src, std::size_t n) {
  std::vector<mpq_class> alphas;
  for (std::size_t k = 0; k + 1 < n; ++k) alphas.push_back(src.draw(1));
  return TimeScale::sequence(src.draw(), std::move(alphas));
}

}  // namespace

BoundScenario random_scenario(Theorem theorem, std::uint64_t seed, std::size_t max_window) {
  RationalSource src(seed);
  const auto family = detail::family_of(theorem);
  const bool power = family == detail::Family::Power || family == detail::Family::PowerKernel;
  const bool kernel = family == detail::Family::Kernel || family == detail::Family::PowerKernel;

  const std::size_t n1 = src.size(max_window);
  const std::size_t n2 = src.size(max_window);
  TimeScale ts1 = theorem == Theorem::Cor31 ? random_sequence(src, n1)
                                            : TimeScale::integers(1, 0, mpq_class(n1 - 1));
  TimeScale ts2 = theorem == Theorem::Cor31 ? random_sequence(src, n2)
                                            : TimeScale::integers(1, 0, mpq_class(n2 - 1));

  std::optional<Exponents> exps;
  Mode mode = Mode::Exact;
  if (power) {
    static const Exponents choices[] = {{2, 1}, {mpq_class(3), mpq_class(2)}, {1, 1}};
    exps = choices[src.pick(3)];
    if (exps->p != 1 || exps->q != 1) mode = Mode::Float;
  }

  const mpq_class a_base = power ? src.draw(1) : src.draw();
  Matrix<mpq_class> a = nondecreasing_table(src, n1, n2, a_base);
  Matrix<mpq_class> f = kernel ? nondecreasing_table(src, n1, n2, src.draw())
                               : random_table(src, n1, n2);

  std::optional<Kernel4> g;
  if (kernel) {
    // g(t1,t2,s1,s2) = w(s1,s2) + c(t1,t2) v(s1,s2), c nondecreasing.
    auto w = random_table(src, n1, n2);
    auto v = random_table(src, n1, n2);
    auto c = nondecreasing_table(src, n1, n2, 0);
    Matrix<Scalar> ws(n1, n2), vs(n1, n2), cs(n1, n2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) {
        ws(i, j) = Scalar(w(i, j)).to_mode(mode);
        vs(i, j) = Scalar(v(i, j)).to_mode(mode);
        cs(i, j) = Scalar(c(i, j)).to_mode(mode);
      }
    g = Kernel4([ws = std::move(ws), vs = std::move(vs), cs = std::move(cs)](
                    std::size_t i1, std::size_t i2, std::size_t k1, std::size_t k2) {
      return ws(k1, k2) + cs(i1, i2) * vs(k1, k2);
    });
  }

  return BoundScenario{to_grid(ts1, ts2, a, mode), to_grid(ts1, ts2, f, mode), std::move(g),
                       exps, theorem, mode};
}

namespace {

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct CaseOutcome {
  std::size_t checks = 0;
  bool failed = false;
  double worst = std::numeric_limits<double>::infinity();
  std::size_t attained = 0;
};

}  // namespace

CampaignSummary run_campaign(std::string_view selector, std::size_t cases, std::uint64_t seed,
                             std::size_t max_window) {
  std::vector<Theorem> theorems;
  if (selector == "thm1")
    theorems = {Theorem::Thm1In2, Theorem::Thm1In6, Theorem::BestLinear};
  else
    theorems = {parse_theorem(selector)};

  std::vector<CaseOutcome> outcomes(cases);
  const long count = static_cast<long>(cases);
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < count; ++idx) {
    CaseOutcome& out = outcomes[static_cast<std::size_t>(idx)];
    try {
      for (Theorem t : theorems) {
        BoundScenario sc = random_scenario(t, case_seed(seed, static_cast<std::size_t>(idx)),
                                           max_window);
        BoundReport report = certify(sc);
        ++out.checks;
        if (!report.certified()) out.failed = true;
        out.worst = std::min(out.worst, report.oracle->worst_relative_margin);
        out.attained += report.oracle->attained_points.size();
      }
    } catch (const std::exception&) {
      out.failed = true;
    }
  }

  CampaignSummary summary;
  summary.theorem = std::string(selector);
  summary.seed = seed;
  summary.cases = cases;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < cases; ++c) {
    summary.checks += outcomes[c].checks;
    summary.attained_count += outcomes[c].attained;
    worst = std::min(worst, outcomes[c].worst);
    if (outcomes[c].failed) {
      ++summary.failures;
      summary.failed_cases.push_back(c);
    }
  }
  summary.worst_margin = cases == 0 || !std::isfinite(worst) ? 0.0 : worst;
  return summary;
}

}  // namespace tscalc
