// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "mimosec/channel.hpp"
#include "mimosec/precoding.hpp"
#include "mimosec/rates.hpp"
#include "mimosec/selection.hpp"

using namespace mimosec;

static void DrawRealization(benchmark::State& state) {
    const std::size_t M = static_cast<std::size_t>(state.range(0));
    const LargeScaleProfile p = uniform_profile(4);
    std::uint64_t t = 0;
    for (auto _ : state) {
        RngStream rng(1, t++);
        ChannelRealization r = draw_realization(M, 4, p, rng);
        benchmark::DoNotOptimize(r.G.entries.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(M) * 5);
}
BENCHMARK(DrawRealization)->RangeMultiplier(4)->Range(64, 4096);

static void SelectStrongest(benchmark::State& state) {
    const std::size_t M = static_cast<std::size_t>(state.range(0));
    RngStream rng(2, 0);
    const ChannelRealization r = draw_realization(M, 1, uniform_profile(1), rng);
    for (auto _ : state) {
        SelectionResult s = select_strongest(r, 4, 0);
        benchmark::DoNotOptimize(s.active_indices.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(M));
}
BENCHMARK(SelectStrongest)->RangeMultiplier(4)->Range(64, 4096);

static void EvaluateRealizationMrt(benchmark::State& state) {
    const std::size_t M = static_cast<std::size_t>(state.range(0));
    RngStream rng(3, 0);
    const ChannelRealization r = draw_realization(M, 4, uniform_profile(4), rng);
    const SelectionSpec spec{SelectionStrategy::Full, 0, std::nullopt};
    for (auto _ : state) {
        RngStream unused(3, 1);
        RateReport rep = evaluate_realization(r, spec, PrecoderScheme::MRT, {1.0, 0.1}, unused);
        benchmark::DoNotOptimize(rep.user.data());
    }
}
BENCHMARK(EvaluateRealizationMrt)->RangeMultiplier(4)->Range(64, 1024);

static void ZfPrecoderBench(benchmark::State& state) {
    const std::size_t L = static_cast<std::size_t>(state.range(0));
    RngStream rng(4, 0);
    const ChannelRealization r = draw_realization(L, 4, uniform_profile(4), rng);
    const SelectionResult s = select_full(r);
    for (auto _ : state) {
        PrecodingMatrix pm = zf_precoder(s);
        benchmark::DoNotOptimize(pm.W.entries.data());
    }
}
BENCHMARK(ZfPrecoderBench)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
