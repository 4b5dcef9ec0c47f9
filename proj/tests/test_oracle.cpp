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

Exponents exps(long p, long q) { return Exponents{mpq_class(p), mpq_class(q)}; }
}  // namespace

TEST_CASE("linear equality case") {
  TimeScale s = Z(0, 3);
  auto one = GridFunction2::constant(s, s, Q(1));
  auto zero = GridFunction2::constant(s, s, Q(0));
  CHECK(equality_case_linear(make(Theorem::Thm1In2, one, zero)).same_values(one));
  auto u = equality_case_linear(example31_scenario(Theorem::Thm1In2));
  CHECK(u(2, 1) == Q(29, 20));
  CHECK(u(3, 2) == Q(51, 5));
  for (std::size_t i = 0; i < u.rows(); ++i) CHECK(u(i, 0) == Q(1));
}

TEST_CASE("power equality case") {
  TimeScale s = Z(0, 4);
  auto onef = GridFunction2::constant(s, s, Scalar(1.0));
  auto u = equality_case_power(make(Theorem::Thm3, onef, onef, std::nullopt, exps(2, 1)));
  CHECK(u(1, 1) == Scalar(std::sqrt(2.0)));
  auto a = GridFunction2::from_fn(s, s, Mode::Float,
                                  [](const Scalar& x, const Scalar& y) { return Scalar(1.0) + x * y; });
  auto zf = GridFunction2::constant(s, s, Scalar(0.0));
  auto r = equality_case_power(make(Theorem::Thm3, a, zf, std::nullopt, exps(3, 1)));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) CHECK(r(i, j) == a(i, j).root(3));
  Gen gen(901);
  auto ae = gen.nondecreasing(s, s, Q(1));
  auto fe = gen.grid(s, s);
  CHECK(equality_case_power(make(Theorem::Thm3, ae, fe, std::nullopt, exps(1, 1)))
            .same_values(equality_case_linear(make(Theorem::Thm1In2, ae, fe))));
  auto zero_a = GridFunction2::constant(s, s, Scalar(0.0));
  CHECK(code_of([&] { equality_case_power(make(Theorem::Thm3, zero_a, onef, std::nullopt, exps(2, 1))); }) ==
        Errc::NonPositiveA);
}

TEST_CASE("kernel equality case") {
  Gen gen(902);
  TimeScale s1 = Z(0, 4), s2 = TimeScale::qscale(3, 1, 3);
  auto a = gen.nondecreasing(s1, s2, Q(1));
  auto w = gen.grid(s1, s2);
  auto one = GridFunction2::constant(s1, s2, Q(1));
  Kernel4 g0([](auto, auto, auto, auto) { return Q(0); });
  CHECK(equality_case_kernel(make(Theorem::Thm2, a, one, g0)).same_values(a));
  CHECK(equality_case_kernel(make(Theorem::Thm2, a, one, Kernel4::from_weight(w)))
            .same_values(equality_case_linear(make(Theorem::Thm1In2, a, w))));
  for (int trial = 0; trial < 10; ++trial) {
    TimeScale z = Z(0, 4);
    auto ar = gen.nondecreasing(z, z, Q(0));
    auto fr = gen.nondecreasing(z, z, Q(0));
    auto wr = gen.grid(z, z);
    Kernel4 g([wr](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
      return wr(k, l) * Scalar::from_int(long(i + j), Mode::Exact);
    });
    auto sc = make(Theorem::Thm2, ar, fr, g);
    auto u = equality_case_kernel(sc);
    auto b = thm2_bound(sc).bounds;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(u(i, j) <= b(i, j));
  }
}

TEST_CASE("equality cases need discrete scales") {
  TimeScale s = TimeScale::uniform_sample(0, mpq_class(1, 4), 5);
  auto one = GridFunction2::constant(s, s, Scalar(1.0));
  CHECK(code_of([&] { equality_case_linear(make(Theorem::Thm1In2, one, one)); }) == Errc::NotDiscrete);
  CHECK_FALSE(certify(make(Theorem::Thm1In2, one, one)).oracle);
}

TEST_CASE("domination check") {
  TimeScale s = Z(0, 3);
  auto a = GridFunction2::from_fn(s, s, Mode::Exact,
                                  [](const Scalar& x, const Scalar& y) { return Q(1) + x + y; });
  auto zero = GridFunction2::constant(s, s, Q(0));
  auto rep = thm1_bound_in2(make(Theorem::Thm1In2, a, zero));
  auto res = check_domination(a, rep);
  CHECK(res.dominated);
  CHECK(res.worst_margin == Q(0));
  CHECK(res.attained_points.size() == 16);

  auto sc = example31_scenario(Theorem::BestLinear);
  auto best = best_linear_bound(sc);
  auto u = equality_case_linear(sc);
  auto ok = check_domination(u, best);
  CHECK(ok.dominated);
  CHECK(std::find(ok.attained_points.begin(), ok.attained_points.end(), GridPoint{2, 1}) !=
        ok.attained_points.end());

  Matrix<Scalar> bumped = u.values();
  bumped(1, 2) = best.bounds(1, 2) + Q(1, 100);
  auto bad = check_domination(GridFunction2(u.ts1(), u.ts2(), bumped), best);
  CHECK_FALSE(bad.dominated);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0] == GridPoint{1, 2});
  CHECK(bad.worst_margin == Q(-1, 100));

  auto other = GridFunction2::constant(Z(0, 2), s, Q(0));
  CHECK(code_of([&] { check_domination(other, best); }) == Errc::GridMismatch);

  Matrix<Scalar> nudged = best.bounds.to_mode(Mode::Float).values();
  nudged(3, 2) = Scalar(nudged(3, 2).to_double() * (1 + 1e-12));
  auto tol = check_domination(GridFunction2(u.ts1(), u.ts2(), nudged), best.bounds.to_mode(Mode::Float));
  CHECK(tol.dominated);
  CHECK(tol.worst_relative_margin < 0);
  CHECK(relative_margin(Scalar(2.0), Scalar(1.0)) == doctest::Approx(0.5));
  CHECK(relative_margin(Scalar(0.0), Scalar(0.0)) == 0.0);
}

TEST_CASE("linear equality case is nondecreasing") {
  Gen gen(903);
  for (int trial = 0; trial < 30; ++trial) {
    TimeScale s1 = gen.scale(static_cast<std::size_t>(gen.integer(2, 8)));
    TimeScale s2 = gen.scale(static_cast<std::size_t>(gen.integer(2, 8)));
    auto a = gen.nondecreasing(s1, s2, Q(0));
    auto u = equality_case_linear(make(Theorem::Thm1In2, a, gen.grid(s1, s2)));
    auto flags = check_monotone(u);
    CHECK(flags.nondecreasing);
  }
}

TEST_CASE("one-step second window degenerates to the one-variable inequality") {
  Gen gen(904);
  for (int trial = 0; trial < 30; ++trial) {
    TimeScale s1 = gen.scale(static_cast<std::size_t>(gen.integer(2, 10)));
    TimeScale s2 = TimeScale::sequence(0, {gen.rational(1, 9).rational()});
    auto a = gen.nondecreasing(s1, s2, Q(0));
    auto f = gen.grid(s1, s2);
    auto sc = make(Theorem::Thm1In2, a, f);
    auto u = equality_case_linear(sc);
    auto B = thm1_bound_in2(sc).bounds;
    Scalar mu2 = s2.graininess_at(0, Mode::Exact);
    // u(t) <= a(t) + sum_{s<t} mu(s) b(s) u(s) with b = mu2 f(., 0) gives u <= a(t) prod (1 + mu b).
    Scalar prod = Q(1);
    for (std::size_t i = 0; i < s1.size(); ++i) {
      Scalar direct = a(i, 1) * prod;
      CHECK(B(i, 1) == direct);
      CHECK(u(i, 1) <= direct);
      if (i + 1 < s1.size()) prod *= Q(1) + s1.graininess_at(i, Mode::Exact) * mu2 * f(i, 0);
    }
  }
}

TEST_CASE("random scenarios are reproducible and admissible") {
  for (auto th : {Theorem::Thm1In2, Theorem::Thm2, Theorem::Thm3, Theorem::Thm4, Theorem::Cor31}) {
    auto x = random_scenario(th, 99, 8);
    auto y = random_scenario(th, 99, 8);
    CHECK(x.a.same_values(y.a));
    CHECK(x.f.same_values(y.f));
    CHECK(x.a.rows() <= 8);
    CHECK(x.a.cols() >= 2);
    auto r = compute_bound(x);
    CHECK(r.hypotheses_hold());
  }
  CHECK(random_scenario(Theorem::Cor31, 5, 6).ts1().kind() == TimeScale::Kind::Sequence);
}

TEST_CASE("campaigns find no domination failures") {
  auto lin = run_campaign("thm1", 100, 7, 12);
  CHECK(lin.cases == 100);
  CHECK(lin.failures == 0);
  CHECK(lin.checks >= 300);
  CHECK(lin.attained_count > 0);
  for (const char* th : {"thm2", "thm3", "thm4", "cor31"}) {
    CAPTURE(th);
    auto s = run_campaign(th, 50, 7, 8);
    CHECK(s.failures == 0);
    CHECK(s.worst_margin >= -kRelativeTolerance);
  }
  auto none = run_campaign("thm3", 0, 7, 8);
  CHECK(none.cases == 0);
  CHECK(none.failures == 0);
  CHECK_THROWS_AS(run_campaign("thm9", 1, 7, 8), Error);
}
