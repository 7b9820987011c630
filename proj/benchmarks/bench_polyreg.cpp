#include <benchmark/benchmark.h>

#include "polyreg/oracle.hpp"
#include "polyreg/structure.hpp"

using namespace polyreg;

namespace {

const ImagUnit& generic_unit() { return default_probes()[6].I; }

void BM_Restrict(benchmark::State& state) {
  Expr e = Expr::generic(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(0)), {1, 2, -3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(restrict(e, generic_unit()));
}
BENCHMARK(BM_Restrict)->DenseRange(1, 5, 2);

void BM_LevelOnSlice(benchmark::State& state) {
  unsigned m = static_cast<unsigned>(state.range(0));
  SlicePoly p = restrict(Expr::generic(m, m, {0, 1, 1, 1}), generic_unit());
  for (auto _ : state) benchmark::DoNotOptimize(level_on_slice(p));
}
BENCHMARK(BM_LevelOnSlice)->DenseRange(1, 5, 2);

void BM_QbarTaylor(benchmark::State& state) {
  unsigned m = static_cast<unsigned>(state.range(0));
  SlicePoly p = restrict(Expr::generic(m, m, {0, 1, 1, 1}), generic_unit());
  for (auto _ : state) benchmark::DoNotOptimize(qbar_taylor(p));
}
BENCHMARK(BM_QbarTaylor)->DenseRange(1, 5, 2);

void BM_SFunc(benchmark::State& state) {
  Quaternion alpha{Rational(1, 3), 2, -5, Rational(7, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(s_func(generic_unit(), alpha, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_SFunc)->Arg(1)->Arg(4)->Arg(8);

void BM_ProductLevel(benchmark::State& state) {
  oracle::InstanceGenerator gen(oracle::RandomSpec{});
  SRPoly f = gen.nonzero_srpoly(generic_unit());
  SRPoly g = gen.nonzero_srpoly(generic_unit());
  for (auto _ : state) benchmark::DoNotOptimize(product_level(f, g, default_probes()));
}
BENCHMARK(BM_ProductLevel);

void BM_Suite(benchmark::State& state, const char* name) {
  oracle::RandomSpec spec = oracle::RandomSpec::defaults_for(name);
  spec.trials = 10;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::run_suite(name, spec));
}
BENCHMARK_CAPTURE(BM_Suite, lemS, "lemS")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, actionk, "actionk")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, thmPoly, "thmPoly")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
