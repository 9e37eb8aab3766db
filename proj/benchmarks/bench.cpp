#include <benchmark/benchmark.h>

#include "fibertwist/cli.hpp"

using namespace fibertwist;

static void BM_Triangulate(benchmark::State& state)
{
    QuotientType q(state.range(0), {1, 6, state.range(0) - 7});
    for (auto _ : state)
        benchmark::DoNotOptimize(triangulate(q));
}
BENCHMARK(BM_Triangulate)->Arg(49)->Arg(97)->Arg(211);

static void BM_Reduce(benchmark::State& state)
{
    WeightedForm f({2, 18, 42, 63}, 126);
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce_form(f));
}
BENCHMARK(BM_Reduce);

static void BM_StarFiber(benchmark::State& state)
{
    CaseSpec c = builtin_case("XII3***")->spec;
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_star_fiber(c));
}
BENCHMARK(BM_StarFiber);

static void BM_Table(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(cli::cmd_table(static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_Table)->DenseRange(1, 3);
BENCHMARK_MAIN();
