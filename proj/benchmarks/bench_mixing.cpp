#include <benchmark/benchmark.h>

#include "dgspec/generators.hpp"
#include "dgspec/markov.hpp"
#include "dgspec/mixing.hpp"

using namespace dgspec;

static void BM_VerifyEmlExhaustive(benchmark::State& state) {
    const SpectralProfile p = spectral_profile(undirected_cycle(static_cast<std::size_t>(state.range(0))));
    EmlPolicy policy;
    policy.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(verify_eml(p, policy));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * state.range(0))));
}
BENCHMARK(BM_VerifyEmlExhaustive)
    ->ArgsProduct({{7, 9, 11}, {1, 0}})
    ->ArgNames({"n", "threads"})
    ->Unit(benchmark::kMillisecond);

static void BM_VerifyEmlSampled(benchmark::State& state) {
    const SpectralProfile p = spectral_profile(complete_bidirected(40));
    EmlPolicy policy;
    policy.kind = EmlPolicy::Kind::sample;
    policy.sample_count = static_cast<std::size_t>(state.range(0));
    policy.seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(verify_eml(p, policy));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VerifyEmlSampled)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
