#include <benchmark/benchmark.h>

#include "transversal/examples.hpp"
#include "transversal/expr.hpp"
#include "transversal/measure.hpp"
#include "transversal/scan.hpp"

using namespace transversal;

static void BM_ExprEvalDual(benchmark::State& state) {
  const Expression e = Expression::parse("x1/sqrt(1 + x1^2 + x2^2)", 2);
  Eigen::VectorXd x(2), partials(2);
  x << 0.3, -0.4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.eval_dual_into(x, partials));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_ExprEvalDual);

static void BM_BuildMeasureGrids(benchmark::State& state) {
  const ChartAtlas atlas = build(ExampleSpec::single_sphere(2, 4));
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_measure_grids(atlas, nodes));
}
BENCHMARK(BM_BuildMeasureGrids)->Arg(16)->Arg(64);

static void BM_NontransverseMeasure(benchmark::State& state) {
  const auto grids = build_measure_grids(build(ExampleSpec::sigma2(2)), static_cast<int>(state.range(0)));
  Eigen::VectorXd a(3);
  a << 0.0, 0.0, 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(nontransverse_measure(grids, a, kDefaultTau));
}
BENCHMARK(BM_NontransverseMeasure)->Arg(64)->Arg(256);

static void BM_ScanCircle(benchmark::State& state) {
  const ChartAtlas atlas = build(ExampleSpec::single_circle());
  const CenterGrid grid(Box(Eigen::VectorXd::Constant(3, -0.6), Eigen::VectorXd::Constant(3, 0.6)),
                        static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ScanReport report = scan_centers(atlas, grid);
    fit_exceptional_planes(report);
    benchmark::DoNotOptimize(report.fits.size());
  }
}
BENCHMARK(BM_ScanCircle)->Arg(9)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
