#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "tscalc/bounds.hpp"
#include "tscalc/oracle.hpp"
#include "tscalc/worked_example.hpp"

using namespace tscalc;
using tscalc::testing::Gen;
using tscalc::testing::Q;
using tscalc::testing::Z;

namespace {
Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::IoError;
}

BoundScenario make(Theorem th, GridFunction2 a, GridFunction2 f,
                   std::optional<Kernel4> g = std::nullopt,
                   std::optional<Exponents> e = std::nullopt) {
  Mode mode = a.mode();
  return BoundScenario{std::move(a), std::move(f), std::move(g), e, th, mode};
}

bool flag(const BoundReport& r, const std::string& name) {
  for (const auto& h : r.hypotheses)
    if (h.name == name) return h.holds;
  FAIL("missing hypothesis " << name);
  return false;
}

Exponents exps(long p, long q) { return Exponents{mpq_class(p), mpq_class(q)}; }

struct Instance {
  GridFunction2 a;
  GridFunction2 w;
};

Instance random_instance(Gen& gen, bool sequence_scales = false, std::size_t max_n = 7) {
  auto size = [&] { return static_cast<std::size_t>(gen.integer(2, long(max_n))); };
  auto scale = [&] {
    if (!sequence_scales) return gen.scale(size());
    std::vector<mpq_class> alphas;
    std::size_t n = size();
    for (std::size_t k = 0; k + 1 < n; ++k) alphas.push_back(gen.rational(1, 9).rational());
    return TimeScale::sequence(gen.rational(0, 5).rational(), alphas);
  };
  TimeScale s1 = scale(), s2 = scale();
  return {gen.nondecreasing(s1, s2, gen.rational(1, 9)), gen.grid(s1, s2)};
}
}  // namespace

TEST_CASE("worked example factors") {
  auto in2 = thm1_bound_in2(example31_scenario(Theorem::Thm1In2));
  auto in6 = thm1_bound_in6(example31_scenario(Theorem::Thm1In6));
  auto best = best_linear_bound(example31_scenario(Theorem::BestLinear));
  CHECK(in2.bounds(2, 1) == Q(3, 2));
  CHECK(in2.bounds(3, 2) == Q(147, 10));
  CHECK(in6.bounds(2, 1) == Q(29, 20));
  CHECK(in6.bounds(3, 2) == Q(637, 40));
  CHECK(best.bounds(2, 1) == Q(29, 20));
  CHECK(best.bounds(3, 2) == Q(147, 10));
  REQUIRE(best.sharpness);
  CHECK((*best.sharpness)(2, 1) == Sharper::In6);
  CHECK((*best.sharpness)(3, 2) == Sharper::In2);
  CHECK(in2.certified());
  CHECK(example31_factors().in6_at_32 == Q(637, 40));
}

TEST_CASE("vanishing f leaves a unchanged") {
  TimeScale s1 = Z(0, 4), s2 = TimeScale::qscale(2, 1, 3);
  auto a = GridFunction2::from_fn(s1, s2, Mode::Exact,
                                  [](const Scalar& x, const Scalar& y) { return Q(1) + x + y; });
  auto zero = GridFunction2::constant(s1, s2, Q(0));
  CHECK(thm1_bound_in2(make(Theorem::Thm1In2, a, zero)).bounds.same_values(a));
  CHECK(thm1_bound_in6(make(Theorem::Thm1In6, a, zero)).bounds.same_values(a));
  auto best = best_linear_bound(make(Theorem::BestLinear, a, zero));
  CHECK(best.bounds.same_values(a));
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t j = 0; j < s2.size(); ++j) CHECK((*best.sharpness)(i, j) == Sharper::Tie);
  auto one = GridFunction2::constant(s1, s2, Q(1));
  auto g0 = Kernel4([](auto, auto, auto, auto) { return Q(0); });
  CHECK(thm2_bound(make(Theorem::Thm2, a, one, g0)).bounds.same_values(a));
  auto af = a.to_mode(Mode::Float);
  auto g0f = Kernel4([](auto, auto, auto, auto) { return Scalar(0.0); });
  auto onef = one.to_mode(Mode::Float);
  auto zf = zero.to_mode(Mode::Float);
  auto t3 = thm3_bound(make(Theorem::Thm3, af, zf, std::nullopt, exps(2, 1)));
  auto t4 = thm4_bound(make(Theorem::Thm4, af, onef, g0f, exps(2, 1)));
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t j = 0; j < s2.size(); ++j) {
      CHECK(t3.bounds(i, j) == af(i, j).sqrt());
      CHECK(t4.bounds(i, j) == af(i, j).sqrt());
    }
}

TEST_CASE("reduction identities hold exactly") {
  Gen gen(808);
  for (int trial = 0; trial < 20; ++trial) {
    auto [a, w] = random_instance(gen);
    auto one = GridFunction2::constant(a.ts1(), a.ts2(), Q(1));
    auto base = thm1_bound_in2(make(Theorem::Thm1In2, a, w)).bounds;
    auto g = Kernel4::from_weight(w);
    CHECK(thm2_bound(make(Theorem::Thm2, a, one, g)).bounds.same_values(base));
    CHECK(thm3_bound(make(Theorem::Thm3, a, w, std::nullopt, exps(1, 1))).bounds.same_values(base));
    CHECK(thm4_bound(make(Theorem::Thm4, a, one, g, exps(1, 1))).bounds.same_values(base));
  }
}

TEST_CASE("kernel bound with a target-free kernel matches the power bound") {
  Gen gen(809);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = random_instance(gen);
    auto a = inst.a.to_mode(Mode::Float);
    auto w = inst.w.to_mode(Mode::Float);
    auto one = GridFunction2::constant(a.ts1(), a.ts2(), Scalar(1.0));
    for (auto e : {exps(2, 1), exps(3, 2), exps(5, 1)}) {
      auto t3 = thm3_bound(make(Theorem::Thm3, a, w, std::nullopt, e));
      auto t4 = thm4_bound(make(Theorem::Thm4, a, one, Kernel4::from_weight(w), e));
      CHECK(t4.bounds.same_values(t3.bounds));
    }
  }
}

TEST_CASE("increment path agrees with the graininess path on sequence scales") {
  Gen gen(810);
  for (int trial = 0; trial < 20; ++trial) {
    auto [a, f] = random_instance(gen, true);
    f = gen.nondecreasing(a.ts1(), a.ts2(), Q(0));
    auto w = gen.grid(a.ts1(), a.ts2());
    Kernel4 g([w](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
      return w(k, l) * Scalar::from_int(long(i + j + 1), Mode::Exact);
    });
    auto exact_sc = make(Theorem::Cor31, a, f, g, exps(1, 1));
    CHECK(cor31_bound(exact_sc).bounds.same_values(thm4_bound(exact_sc).bounds));
    auto af = a.to_mode(Mode::Float), ff = f.to_mode(Mode::Float);
    Kernel4 gf([w](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
      return w(k, l).to_mode(Mode::Float) * Scalar(double(i + j + 1));
    });
    auto float_sc = make(Theorem::Cor31, af, ff, gf, exps(2, 1));
    CHECK(cor31_bound(float_sc).bounds.same_values(thm4_bound(float_sc).bounds));
  }
  TimeScale s1 = TimeScale::sequence(0, {mpq_class(1, 2), mpq_class(1, 3), mpq_class(1, 4)});
  TimeScale s2 = TimeScale::sequence(0, {mpq_class(1), mpq_class(2)});
  Gen fixed(811);
  auto f = fixed.nondecreasing(s1, s2, Q(0));
  auto a = fixed.nondecreasing(s1, s2, Q(1));
  Kernel4 g([w = fixed.grid(s1, s2)](auto, auto, std::size_t k, std::size_t l) { return w(k, l); });
  auto sc = make(Theorem::Cor31, a, f, g, exps(1, 1));
  CHECK(cor31_bound(sc).bounds.same_values(thm4_bound(sc).bounds));
}

TEST_CASE("unit-step grids reproduce the discrete product formula") {
  Gen gen(812);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n1 = static_cast<std::size_t>(gen.integer(2, 8));
    std::size_t n2 = static_cast<std::size_t>(gen.integer(2, 8));
    long o1 = gen.integer(-3, 3), o2 = gen.integer(-3, 3);
    TimeScale s1 = Z(o1, o1 + long(n1) - 1), s2 = Z(o2, o2 + long(n2) - 1);
    auto a = gen.nondecreasing(s1, s2, Q(0));
    auto f = gen.grid(s1, s2);
    auto B = thm1_bound_in2(make(Theorem::Thm1In2, a, f)).bounds;
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) {
        mpq_class prod = 1;
        for (std::size_t s = 0; s < i; ++s) {
          mpq_class inner = 0;
          for (std::size_t t = 0; t < j; ++t) inner += f(s, t).rational();
          prod *= 1 + inner;
        }
        CHECK(B(i, j) == Scalar(mpq_class(a(i, j).rational() * prod)));
      }
  }
}

TEST_CASE("parallel kernels agree with the serial reference bit for bit") {
  Gen gen(813);
  for (int trial = 0; trial < 15; ++trial) {
    auto [a, w] = random_instance(gen, false, 9);
    auto f = gen.nondecreasing(a.ts1(), a.ts2(), Q(0));
    auto wk = gen.grid(a.ts1(), a.ts2());
    Kernel4 g([wk](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
      return wk(k, l) * Scalar::from_int(long(i * 3 + j + 1), Mode::Exact);
    });
    auto af = a.to_mode(Mode::Float), ff = f.to_mode(Mode::Float), wf = w.to_mode(Mode::Float);
    Kernel4 gf([wk](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
      return wk(k, l).to_mode(Mode::Float) * Scalar(double(i * 3 + j + 1));
    });
    for (int pass = 0; pass < 2; ++pass) {
      bool exact = pass == 0;
      auto A = exact ? a : af;
      auto W = exact ? w : wf;
      auto F = exact ? f : ff;
      auto G = exact ? g : gf;
      auto lin = make(Theorem::Thm1In2, A, W);
      CHECK(thm1_bound_in2(lin).bounds.same_values(reference::thm1_bound_in2(lin).bounds));
      CHECK(thm1_bound_in6(lin).bounds.same_values(reference::thm1_bound_in6(lin).bounds));
      auto k2 = make(Theorem::Thm2, A, F, G);
      CHECK(thm2_bound(k2).bounds.same_values(reference::thm2_bound(k2).bounds));
      auto e = exact ? exps(1, 1) : exps(3, 2);
      auto p3 = make(Theorem::Thm3, A, W, std::nullopt, e);
      CHECK(thm3_bound(p3).bounds.same_values(reference::thm3_bound(p3).bounds));
      auto p4 = make(Theorem::Thm4, A, F, G, e);
      CHECK(thm4_bound(p4).bounds.same_values(reference::thm4_bound(p4).bounds));
    }
  }
}

TEST_CASE("bounds grow with f and never fall below a^(1/p)") {
  Gen gen(814);
  for (int trial = 0; trial < 20; ++trial) {
    auto [a, w] = random_instance(gen);
    Matrix<Scalar> bigger = w.values();
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) bigger(i, j) += gen.rational();
    GridFunction2 w2(w.ts1(), w.ts2(), bigger);
    auto check_pair = [&](const GridFunction2& lo, const GridFunction2& hi, const GridFunction2& floor) {
      for (std::size_t i = 0; i < lo.rows(); ++i)
        for (std::size_t j = 0; j < lo.cols(); ++j) {
          CHECK(lo(i, j) <= hi(i, j));
          CHECK(floor(i, j) <= lo(i, j));
        }
    };
    for (auto th : {Theorem::Thm1In2, Theorem::Thm1In6, Theorem::BestLinear})
      check_pair(compute_bound(make(th, a, w)).bounds, compute_bound(make(th, a, w2)).bounds, a);

    auto af = a.to_mode(Mode::Float), wf = w.to_mode(Mode::Float), w2f = w2.to_mode(Mode::Float);
    Matrix<Scalar> root(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) root(i, j) = af(i, j).root(3);
    GridFunction2 a_root(a.ts1(), a.ts2(), root);
    check_pair(thm3_bound(make(Theorem::Thm3, af, wf, std::nullopt, exps(3, 2))).bounds,
               thm3_bound(make(Theorem::Thm3, af, w2f, std::nullopt, exps(3, 2))).bounds, a_root);
    auto one = GridFunction2::constant(a.ts1(), a.ts2(), Scalar(1.0));
    auto two = GridFunction2::constant(a.ts1(), a.ts2(), Scalar(2.0));
    check_pair(thm4_bound(make(Theorem::Thm4, af, one, Kernel4::from_weight(wf), exps(3, 1))).bounds,
               thm4_bound(make(Theorem::Thm4, af, two, Kernel4::from_weight(w2f), exps(3, 1))).bounds,
               a_root.to_mode(Mode::Float));
  }
}

TEST_CASE("structural errors") {
  TimeScale s = Z(0, 2);
  auto one = GridFunction2::constant(s, s, Q(1));
  auto zero = GridFunction2::constant(s, s, Q(0));
  auto onef = one.to_mode(Mode::Float);
  CHECK(code_of([&] { thm3_bound(make(Theorem::Thm3, zero.to_mode(Mode::Float), onef, std::nullopt, exps(2, 1))); }) ==
        Errc::NonPositiveA);
  CHECK(code_of([&] { thm3_bound(make(Theorem::Thm3, one, one, std::nullopt, exps(2, 1))); }) ==
        Errc::ModeRequired);
  CHECK(code_of([&] { thm3_bound(make(Theorem::Thm3, onef, onef, std::nullopt, exps(1, 2))); }) ==
        Errc::InvalidExponents);
  CHECK(code_of([&] { thm3_bound(make(Theorem::Thm3, onef, onef, std::nullopt, exps(0, 0))); }) ==
        Errc::InvalidExponents);
  CHECK(code_of([&] { thm2_bound(make(Theorem::Thm2, one, one)); }) == Errc::ConfigError);
  CHECK(code_of([&] {
          thm4_bound(make(Theorem::Thm4, one, one, Kernel4::from_weight(one), exps(1, 1)));
          cor31_bound(make(Theorem::Cor31, one, one, Kernel4::from_weight(one), exps(1, 1)));
        }) == Errc::WrongScaleKind);
  CHECK(code_of([&] { thm1_bound_in2(BoundScenario{one, onef, std::nullopt, std::nullopt,
                                                   Theorem::Thm1In2, Mode::Exact}); }) ==
        Errc::ModeMismatch);
  auto other = GridFunction2::constant(Z(0, 3), s, Q(1));
  CHECK(code_of([&] { thm1_bound_in2(make(Theorem::Thm1In2, one, other)); }) == Errc::GridMismatch);
  TimeScale sample = TimeScale::uniform_sample(0, mpq_class(1, 4), 5);
  auto exact_sample = GridFunction2::constant(sample, sample, Q(1));
  CHECK(code_of([&] { thm1_bound_in2(make(Theorem::Thm1In2, exact_sample, exact_sample)); }) ==
        Errc::ModeRequired);
  Kernel4 g([](auto, auto, auto, auto) { return Q(1); });
  CHECK(code_of([&] { g(1, 1, 2, 0); }) == Errc::KernelDomain);
  CHECK(code_of([&] { g(1, 1, 0, 2); }) == Errc::KernelDomain);
  CHECK(g(1, 1, 1, 1) == Q(1));
}

TEST_CASE("violated hypotheses downgrade the report") {
  TimeScale s = Z(0, 2);
  auto f = GridFunction2::constant(s, s, Q(1, 2));
  auto a = tscalc::testing::table(s, s, {{Q(3), Q(1), Q(1)}, {Q(3), Q(3), Q(3)}, {Q(3), Q(3), Q(3)}});
  auto r = thm1_bound_in2(make(Theorem::Thm1In2, a, f));
  CHECK_FALSE(flag(r, "a_nondecreasing"));
  CHECK_FALSE(r.certified());
  CHECK(r.bounds(2, 2) == Q(3) * Q(2) * Q(2));
  auto negf = GridFunction2::constant(s, s, Q(-1, 4));
  auto rn = thm1_bound_in2(make(Theorem::Thm1In2, GridFunction2::constant(s, s, Q(1)), negf));
  CHECK_FALSE(flag(rn, "f_nonnegative"));
  CHECK_FALSE(rn.certified());
  auto big_neg = GridFunction2::constant(s, s, Q(-3));
  auto rr = thm1_bound_in2(make(Theorem::Thm1In2, GridFunction2::constant(s, s, Q(1)), big_neg));
  CHECK_FALSE(flag(rr, "positively_regressive"));
}

TEST_CASE("kernels growing backwards in the target break the kernel bound") {
  TimeScale s = Z(0, 2);
  auto one = GridFunction2::constant(s, s, Q(1));
  Kernel4 g([](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    if (i == 1 && j == 1 && k == 0 && l == 0) return Q(1000);
    if (i == 2 && j == 2 && k == 1 && l == 1) return Q(1);
    return Q(0);
  });
  auto sc = make(Theorem::Thm2, one, one, g);
  auto report = certify(sc);
  CHECK_FALSE(flag(report, "kernel_nondecreasing_in_target"));
  REQUIRE(report.oracle);
  CHECK_FALSE(report.oracle->dominated);
  CHECK(report.oracle->u_star(2, 2) == Q(1002));
  CHECK(report.bounds(2, 2) == Q(2));
  CHECK_FALSE(report.certified());
}

TEST_CASE("sampled grids approach the continuum exponential") {
  std::vector<double> errors;
  for (long n : {16, 32, 64}) {
    TimeScale ts = TimeScale::uniform_sample(0, mpq_class(1, n), static_cast<std::size_t>(n + 1));
    auto a = GridFunction2::constant(ts, ts, Scalar(1.0));
    auto f = GridFunction2::from_fn(ts, ts, Mode::Float,
                                    [](const Scalar& x, const Scalar& y) { return x + y; });
    auto r = thm1_bound_in2(make(Theorem::Thm1In2, a, f));
    CHECK(r.approximate);
    errors.push_back(std::fabs(r.bounds(ts.last(), ts.last()).to_double() - std::exp(1.0)));
  }
  CHECK(errors[0] == doctest::Approx(0.23707).epsilon(1e-4));
  CHECK(errors[1] == doctest::Approx(0.12441).epsilon(1e-4));
  CHECK(errors[2] == doctest::Approx(0.06380).epsilon(1e-4));
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    CHECK(errors[k] / errors[k + 1] >= 1.5);
    CHECK(errors[k] / errors[k + 1] <= 2.5);
  }
}

TEST_CASE("freezing the first argument of the power generator is unsound") {
  TimeScale s = Z(0, 1);
  auto a = GridFunction2::constant(s, s, Scalar(1.0));
  auto f = tscalc::testing::table(s, s, {{Q(8), Q(0)}, {Q(0), Q(0)}}).to_mode(Mode::Float);
  auto sc = make(Theorem::Thm3, a, f, std::nullopt, exps(2, 1));
  auto report = certify(sc);
  REQUIRE(report.oracle);
  CHECK(report.oracle->dominated);
  // Generator f(1, s2) a^{-1/2}(1, s2) = 0 gives a^{1/2} = 1, while u*(1,1) = 3.
  double frozen = 1.0;
  CHECK(report.oracle->u_star(1, 1).to_double() == doctest::Approx(3.0));
  CHECK(report.oracle->u_star(1, 1).to_double() > frozen);
  CHECK(report.bounds(1, 1).to_double() == doctest::Approx(3.0));
}
