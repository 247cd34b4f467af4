#include <benchmark/benchmark.h>

#include "dgspec/generators.hpp"
#include "dgspec/markov.hpp"

using namespace dgspec;

static void BM_SpectralProfileRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DirectedGraph g = random_strongly_connected(n, 0.3, 17);
    const TransitionMatrix t = build_transition_matrix(g);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(spectral_profile(t));
        } catch (const std::exception& e) {
            state.SkipWithError(e.what());
            break;
        }
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralProfileRandom)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

static void BM_SpectralProfileComplete(benchmark::State& state) {
    const DirectedGraph g = complete_bidirected(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_profile(g));
}
BENCHMARK(BM_SpectralProfileComplete)->Arg(16)->Arg(64);
