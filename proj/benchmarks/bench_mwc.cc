#include <benchmark/benchmark.h>

#include "cyclekit/generate.hpp"
#include "cyclekit/mwc.hpp"
#include "cyclekit/oracles.hpp"

using namespace cyclekit;

namespace {

WeightedGraph grid(int d) {
    GraphSpec spec;
    spec.kind = GraphKind::Grid;
    spec.a = d;
    return generate(spec);
}

WeightedGraph er(int n, std::uint64_t seed) {
    GraphSpec spec;
    spec.kind = GraphKind::ErdosRenyi;
    spec.a = n;
    spec.p = 6.0 / n;
    spec.seed = seed;
    spec.wmin = 0.5;
    spec.wmax = 2.0;
    return generate(spec);
}

}  // namespace

static void BM_FindMwc_Grid(benchmark::State& state) {
    const WeightedGraph g = grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_mwc(g).gamma);
    state.SetLabel(std::to_string(g.edge_count()) + " edges");
}
BENCHMARK(BM_FindMwc_Grid)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_RootedGirth_Grid(benchmark::State& state) {
    const WeightedGraph g = grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rooted_girth(g).gamma);
}
BENCHMARK(BM_RootedGirth_Grid)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_FindMwc_ER(benchmark::State& state) {
    const WeightedGraph g = er(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(find_mwc(g).gamma);
}
BENCHMARK(BM_FindMwc_ER)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMicrosecond);

static void BM_FindMwc_ER_NoDiscard(benchmark::State& state) {
    const WeightedGraph g = er(static_cast<int>(state.range(0)), 1);
    MwcOptions options;
    options.discarding = false;
    for (auto _ : state) benchmark::DoNotOptimize(find_mwc(g, options).gamma);
}
BENCHMARK(BM_FindMwc_ER_NoDiscard)
    ->RangeMultiplier(2)
    ->Range(64, 512)
    ->Unit(benchmark::kMicrosecond);
