#include <rmg/construct.hpp>
#include <rmg/probabilistic.hpp>

#include <benchmark/benchmark.h>

using namespace rmg;

static void BM_BuildPr(benchmark::State & state)
{
    ConstructionParams params;
    params.g = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_pr(3, params.g, params));
}
BENCHMARK(BM_BuildPr)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_RandomHighGirth(benchmark::State & state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(random_high_girth(n, 3, 4, seed++, {1, false}));
}
BENCHMARK(BM_RandomHighGirth)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_CountingThreshold(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(counting_threshold(3, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountingThreshold)->Arg(3)->Arg(5);
