#include <benchmark/benchmark.h>

#include "ibstokes/exact.hpp"
#include "ibstokes/mac.hpp"
#include "ibstokes/three_poisson.hpp"

using namespace ibstokes;

static void BM_SpreadCosine(benchmark::State& state) {
  const auto pb = example::make_problem(static_cast<int>(state.range(0)), KernelKind::Cosine);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spread_forces(pb.grid, Layout::Nodes, pb.markers, pb.force, pb.kernel));
  }
}
BENCHMARK(BM_SpreadCosine)->Arg(64)->Arg(256);

static void BM_DirichletSolve(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto g = make_grid(-1, 1, -1, 1, N);
  LinearSolveOptions opts;
  opts.method = state.range(1) ? SolveMethod::FastTransform : SolveMethod::DirectSparse;
  const DirichletPoissonSolver solver(g, opts);
  const ScalarField rhs(Layout::Nodes, N, 1.0), bc(Layout::Nodes, N);
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(rhs, bc));
  state.SetLabel(state.range(1) ? "fft" : "direct");
}
BENCHMARK(BM_DirichletSolve)->Args({128, 0})->Args({128, 1})->Args({256, 0})->Args({256, 1});

static void BM_ThreePoisson(benchmark::State& state) {
  const auto pb = example::make_problem(static_cast<int>(state.range(0)), KernelKind::Cosine);
  for (auto _ : state) benchmark::DoNotOptimize(solve_three_poisson(pb));
}
BENCHMARK(BM_ThreePoisson)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_MacSolve(benchmark::State& state) {
  const auto pb = example::make_problem(static_cast<int>(state.range(0)), KernelKind::Cosine);
  for (auto _ : state) benchmark::DoNotOptimize(solve_mac(pb));
}
BENCHMARK(BM_MacSolve)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
