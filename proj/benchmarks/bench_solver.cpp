#include <rmg/construct.hpp>
#include <rmg/solver.hpp>

#include <benchmark/benchmark.h>

using namespace rmg;

static void BM_UnavoidableBase(benchmark::State & state)
{
    const auto r = static_cast<std::size_t>(state.range(0));
    auto h = build_h(r, 2, {}).graph;
    std::uint64_t nodes = 0;
    for (auto _ : state)
        nodes = verify_rm_unavoidable(h).nodes;
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_UnavoidableBase)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_PartRainbowForced(benchmark::State & state)
{
    ConstructionParams params;
    params.r = 3;
    params.g = 3;
    auto h = build_pr(3, 3, params).graph;
    std::uint64_t nodes = 0;
    for (auto _ : state)
        nodes = verify_part_rainbow_forced(h).nodes;
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_PartRainbowForced)->Unit(benchmark::kMillisecond);
