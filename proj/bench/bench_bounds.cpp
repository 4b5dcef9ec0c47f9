// Serial reference loops against the OpenMP kernels on float grids.
#include <benchmark/benchmark.h>

#include "tscalc/bounds.hpp"

using namespace tscalc;

namespace {

BoundScenario scenario(Theorem theorem, long n) {
  TimeScale ts = TimeScale::integers(1, 0, n - 1);
  auto a = GridFunction2::from_fn(ts, ts, Mode::Float, [](const Scalar& x, const Scalar& y) {
    return Scalar(1.0) + x * Scalar(0.01) + y * Scalar(0.02);
  });
  auto f = GridFunction2::from_fn(ts, ts, Mode::Float, [](const Scalar& x, const Scalar& y) {
    return Scalar(0.001) * (x + y + Scalar(1.0));
  });
  Kernel4 g([](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return Scalar(1e-3 * double(i + j + 1) / double(k + l + 1));
  });
  Exponents e{mpq_class(3), mpq_class(2)};
  return BoundScenario{a, f, g, e, theorem, Mode::Float};
}

template <BoundReport (*Fn)(const BoundScenario&)>
void run(benchmark::State& state, Theorem theorem) {
  BoundScenario sc = scenario(theorem, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(sc));
  state.SetComplexityN(state.range(0));
}

void BM_Thm1In2Parallel(benchmark::State& s) { run<thm1_bound_in2>(s, Theorem::Thm1In2); }
void BM_Thm1In2Serial(benchmark::State& s) { run<reference::thm1_bound_in2>(s, Theorem::Thm1In2); }
void BM_Thm3Parallel(benchmark::State& s) { run<thm3_bound>(s, Theorem::Thm3); }
void BM_Thm3Serial(benchmark::State& s) { run<reference::thm3_bound>(s, Theorem::Thm3); }
void BM_Thm2Parallel(benchmark::State& s) { run<thm2_bound>(s, Theorem::Thm2); }
void BM_Thm2Serial(benchmark::State& s) { run<reference::thm2_bound>(s, Theorem::Thm2); }
void BM_Thm4Parallel(benchmark::State& s) { run<thm4_bound>(s, Theorem::Thm4); }
void BM_Thm4Serial(benchmark::State& s) { run<reference::thm4_bound>(s, Theorem::Thm4); }

}  // namespace

BENCHMARK(BM_Thm1In2Parallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm1In2Serial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm3Parallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm3Serial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm2Parallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm2Serial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm4Parallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm4Serial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
