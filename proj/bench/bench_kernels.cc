#include <crumby/gadgets.hh>
#include <crumby/graph.hh>
#include <crumby/lemmas.hh>
#include <crumby/solve.hh>

#include <benchmark/benchmark.h>

using namespace crumby;

namespace
{
    auto rich_spec() -> BoundarySpec
    {
        BoundarySpec s;
        s.add_boundary(0).add_boundary(1).fix(0, Color::Red);
        return s;
    }

    auto bench_count_serial(benchmark::State & state) -> void
    {
        auto g = build_G18().graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(count_crumby_serial(g));
    }

    auto bench_count_parallel(benchmark::State & state) -> void
    {
        auto g = build_G18().graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(count_crumby(g));
    }

    auto bench_exhaustive_serial(benchmark::State & state) -> void
    {
        auto g = build_G18().graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(exhaustive_solve_serial(g));
    }

    auto bench_exhaustive_parallel(benchmark::State & state) -> void
    {
        auto g = build_G18().graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(exhaustive_solve(g));
    }

    auto bench_feasible_serial(benchmark::State & state) -> void
    {
        auto r = build_R().graph;
        auto spec = rich_spec();
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_feasible_serial(r, spec));
    }

    auto bench_feasible_parallel(benchmark::State & state) -> void
    {
        auto r = build_R().graph;
        auto spec = rich_spec();
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_feasible(r, spec));
    }

    auto bench_g40(benchmark::State & state, SolveMethod method, bool parallel) -> void
    {
        auto g = build_G40().graph;
        SolveOptions options;
        options.parallel = parallel;
        for (auto _ : state)
            benchmark::DoNotOptimize(solve(g, method, options));
    }
}

BENCHMARK(bench_count_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_count_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_exhaustive_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_exhaustive_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_feasible_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(bench_feasible_parallel)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(bench_g40, backtracking, SolveMethod::Backtracking, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_g40, backtracking_parallel, SolveMethod::Backtracking, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_g40, dpll, SolveMethod::Dpll, false)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
