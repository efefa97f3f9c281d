#include <benchmark/benchmark.h>

#include "cyclekit/generate.hpp"
#include "cyclekit/modulus.hpp"
#include "cyclekit/oracles.hpp"
#include "cyclekit/qp.hpp"

using namespace cyclekit;

namespace {

WeightedGraph by_spec(const std::string& text) { return generate(parse_graph_spec(text)); }

ConstraintMatrix cycle_matrix(const WeightedGraph& g) {
    ConstraintMatrix m(g.edge_count());
    for (const CycleRecord& c : enumerate_cycles(g)) {
        std::vector<EdgeId> ids;
        for (size_t i = 0; i < c.vertices.size(); ++i)
            ids.push_back(*g.find_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
        m.add_row(ids);
    }
    return m;
}

}  // namespace

static void BM_Modulus_Cycle(benchmark::State& state) {
    const WeightedGraph g = by_spec("cycle:" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_modulus(g).modulus);
}
BENCHMARK(BM_Modulus_Cycle)->Arg(8)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_Modulus_Grid(benchmark::State& state) {
    const WeightedGraph g = by_spec("grid:" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_modulus(g).modulus);
}
BENCHMARK(BM_Modulus_Grid)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Modulus_Proximity(benchmark::State& state) {
    const WeightedGraph g = by_spec("proximity:10:seed=5");
    for (auto _ : state) benchmark::DoNotOptimize(compute_modulus(g).modulus);
}
BENCHMARK(BM_Modulus_Proximity)->Unit(benchmark::kMillisecond);

static void BM_QpSolve_Cold(benchmark::State& state) {
    const WeightedGraph g = by_spec("grid:3");
    const ConstraintMatrix m = cycle_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(solve_qp(m).modulus);
}
BENCHMARK(BM_QpSolve_Cold)->Unit(benchmark::kMicrosecond);

static void BM_QpSolve_Warm(benchmark::State& state) {
    const WeightedGraph g = by_spec("grid:3");
    const ConstraintMatrix m = cycle_matrix(g);
    ConstraintMatrix partial(m.edge_count);
    for (size_t r = 0; r + 1 < m.rows.size(); ++r) partial.add_row(m.rows[r]);
    const QpSolution seed = solve_qp(partial);
    for (auto _ : state) benchmark::DoNotOptimize(solve_qp(m, &seed).modulus);
}
BENCHMARK(BM_QpSolve_Warm)->Unit(benchmark::kMicrosecond);
