#include "hypela/closed_curves.hpp"
#include "hypela/dirichlet.hpp"
#include "hypela/fundamental_system.hpp"
#include "hypela/special_functions.hpp"

#include <benchmark/benchmark.h>

using namespace hypela;

static void BM_jacobi(benchmark::State& state)
{
    double u = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobi_sn_cn_dn(u, 0.93));
        u += 1e-3;
    }
}
BENCHMARK(BM_jacobi);

static void BM_frame_orbitlike(benchmark::State& state)
{
    OrbitlikeParams params(0.8, 0.3);
    double s = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(frame_orbitlike(s, params));
        s += 1e-3;
    }
}
BENCHMARK(BM_frame_orbitlike);

static void BM_curve_point(benchmark::State& state)
{
    Elastica curve = canonical_closed_curve(2, 3);
    double s = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(curve.at(s));
        s += 1e-3;
    }
}
BENCHMARK(BM_curve_point);

static void BM_table(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_table(20, 1));
    }
}
BENCHMARK(BM_table)->Unit(benchmark::kMillisecond);

static void BM_self_intersections(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(self_intersections(12, 17));
    }
}
BENCHMARK(BM_self_intersections)->Unit(benchmark::kMillisecond);

static void BM_dirichlet(benchmark::State& state)
{
    DirichletProblem problem{-1.0, 2.0, 1.0, 2.0, 0.0, 0.0};
    SolveConfig config;
    config.l_max = 8;
    config.grid = 16;
    config.threads = 1;
    config.orientation = OrientationSearch::negative;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(problem, config));
    }
}
BENCHMARK(BM_dirichlet)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
