#include <benchmark/benchmark.h>

#include "subcode/grassmann.hpp"

using namespace subcode;

static void EnumerateSolidsF2_8(benchmark::State& state) {
    Grassmannian g(FieldSpec(2), 8, 4);
    for (auto _ : state) {
        std::uint64_t count = 0;
        g.for_each([&count](const Subspace&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * 200787);
}
BENCHMARK(EnumerateSolidsF2_8);

static void IndexOfRoundTrip(benchmark::State& state) {
    Grassmannian g(FieldSpec(2), 7, 3);
    const std::uint64_t n = g.count_u64();
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.index_of(g.at(i)));
        i = (i + 6151) % n;
    }
}
BENCHMARK(IndexOfRoundTrip);

static void SubspaceDistancePlanes(benchmark::State& state) {
    Grassmannian g(FieldSpec(2), 7, 3);
    Subspace a = g.at(11);
    Subspace b = g.at(7002);
    for (auto _ : state) {
        benchmark::DoNotOptimize(subspace_distance(a, b));
    }
}
BENCHMARK(SubspaceDistancePlanes);

static void DualSolid(benchmark::State& state) {
    Grassmannian g(FieldSpec(2), 8, 4);
    Subspace a = g.at(100787);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dual(a));
    }
}
BENCHMARK(DualSolid);
