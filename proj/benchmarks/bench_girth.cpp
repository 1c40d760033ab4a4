#include <rmg/girth.hpp>
#include <rmg/probabilistic.hpp>

#include <benchmark/benchmark.h>

using namespace rmg;

static void BM_GirthComplete(benchmark::State & state)
{
    auto h = complete_hypergraph(static_cast<std::size_t>(state.range(0)), Uniformity(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(girth(h, 4));
    state.counters["edges"] = static_cast<double>(h.num_edges());
}
BENCHMARK(BM_GirthComplete)->Arg(8)->Arg(16)->Arg(32);

static void BM_GirthCarrier(benchmark::State & state)
{
    auto carrier = random_high_girth(static_cast<std::size_t>(state.range(0)), 3, 4, 1).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(girth(carrier, 6));
    state.counters["edges"] = static_cast<double>(carrier.num_edges());
}
BENCHMARK(BM_GirthCarrier)->Arg(100)->Arg(400);

static void BM_CountTwoCycles(benchmark::State & state)
{
    auto h = complete_hypergraph(static_cast<std::size_t>(state.range(0)), Uniformity(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_cycles(h, 2));
}
BENCHMARK(BM_CountTwoCycles)->Arg(6)->Arg(9);
