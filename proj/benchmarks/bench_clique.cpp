#include <benchmark/benchmark.h>

#include "subcode/clique_engine.hpp"
#include "subcode/constructions.hpp"

using namespace subcode;

static void BuildDistanceGraph_2_6_3_4(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_distance_graph(2, 6, 3, 4));
    }
}
BENCHMARK(BuildDistanceGraph_2_6_3_4);

static void MaxClique_2_5_2_4(benchmark::State& state) {
    ConflictGraph g = build_distance_graph(2, 5, 2, 4);
    for (auto _ : state) {
        CliqueBudget budget;
        budget.sls_iterations = 10000;
        benchmark::DoNotOptimize(max_clique(g, budget));
    }
}
BENCHMARK(MaxClique_2_5_2_4)->Unit(benchmark::kMillisecond);

static void ExtensionGraphOfConstructedCode(benchmark::State& state) {
    const SubspaceCode code = plus_one(lifted_mrd_code(2, 7, 3, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_extension_graph(code));
    }
    state.SetLabel("A(C) plus pairwise distance scan");
}
BENCHMARK(ExtensionGraphOfConstructedCode)->Unit(benchmark::kMillisecond);

static void GreedyCliqueWarmStart(benchmark::State& state) {
    ConflictGraph g = build_distance_graph(2, 5, 2, 4);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_clique(g, 16, seed++));
    }
    state.SetItemsProcessed(state.iterations() * 16);
}
BENCHMARK(GreedyCliqueWarmStart)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
