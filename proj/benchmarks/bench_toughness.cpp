#include <benchmark/benchmark.h>

#include "dgspec/generators.hpp"
#include "dgspec/toughness.hpp"

using namespace dgspec;

static void BM_ExactToughness(benchmark::State& state) {
    const DirectedGraph g = undirected_cycle(static_cast<std::size_t>(state.range(0)));
    ToughnessOptions options;
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(exact_toughness(g, options));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_ExactToughness)
    ->ArgsProduct({{10, 14, 18}, {1, 0}})
    ->ArgNames({"n", "threads"})
    ->Unit(benchmark::kMillisecond);

static void BM_ExactToughnessPetersen(benchmark::State& state) {
    const DirectedGraph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(exact_toughness(g));
}
BENCHMARK(BM_ExactToughnessPetersen);
