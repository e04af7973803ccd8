#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "subcode/gf_linalg.hpp"

using namespace subcode;

namespace {

std::vector<MatRows> random_matrices(unsigned q, unsigned rows, unsigned cols, std::size_t count) {
    std::mt19937_64 rng(12345);
    std::vector<MatRows> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        MatRows m(FieldSpec(q), rows, cols);
        for (unsigned r = 0; r < rows; ++r) {
            for (unsigned c = 0; c < cols; ++c) m.set(r, c, static_cast<std::uint8_t>(rng() % q));
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

static void RrefBinary8x8(benchmark::State& state) {
    const auto mats = random_matrices(2, 8, 8, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(mats[i++ & 255]));
    }
}
BENCHMARK(RrefBinary8x8);

static void RrefTernary6x6(benchmark::State& state) {
    const auto mats = random_matrices(3, 6, 6, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(mats[i++ & 255]));
    }
}
BENCHMARK(RrefTernary6x6);

static void StackRankPacked(benchmark::State& state) {
    const auto a = random_matrices(2, 4, 8, 256);
    const auto b = random_matrices(2, 4, 8, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(stack_rank(a[i & 255], b[(i * 7) & 255]));
        ++i;
    }
}
BENCHMARK(StackRankPacked);

static void Rank2WordsKernel(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<std::uint64_t> rows(8 * 1024);
    for (auto& w : rows) w = rng() & 0xff;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank2_words({rows.data() + (i & 1023) * 8, 4}, {rows.data() + ((i * 13) & 1023) * 8, 4}));
        ++i;
    }
}
BENCHMARK(Rank2WordsKernel);
