#include <benchmark/benchmark.h>

#include "tracerec/baselines.hpp"
#include "tracerec/channel.hpp"
#include "tracerec/infiltration.hpp"
#include "tracerec/multi_trace.hpp"
#include "tracerec/single_trace.hpp"

using namespace tracerec;

namespace {

std::vector<Seq> traces_for(std::size_t n, int t, double delta, std::uint64_t seed) {
    Rng rng(seed);
    const Seq x = rng.random_bits(n);
    return transmit_t(x, ChannelConfig(delta, t), rng);
}

void BM_BinomialCoeff(benchmark::State& state) {
    Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Seq f = rng.random_bits(n);
    const Seq g = rng.random_bits(n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(binomial_coeff(f, g));
}
BENCHMARK(BM_BinomialCoeff)->Arg(64)->Arg(256)->Arg(1024);

void BM_PosteriorSingle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto y = traces_for(n, 1, 0.2, 2)[0];
    const Priors p = Priors::uniform(n);
    for (auto _ : state) benchmark::DoNotOptimize(posterior_single(p, y));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PosteriorSingle)->Arg(125)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Complexity(benchmark::oNSquared);

void BM_SmapExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto traces = traces_for(n, static_cast<int>(state.range(1)), 0.2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(smap_exact(n, traces));
}
BENCHMARK(BM_SmapExact)->Args({30, 2})->Args({100, 2})->Args({30, 3})->Args({100, 3})->Unit(benchmark::kMillisecond);

void BM_SmapSequential(benchmark::State& state) {
    const auto traces = traces_for(100, static_cast<int>(state.range(0)), 0.2, 4);
    for (auto _ : state) benchmark::DoNotOptimize(smap_sequential(100, traces));
}
BENCHMARK(BM_SmapSequential)->Arg(2)->Arg(10);

void BM_GradAscentTraces(benchmark::State& state) {
    const auto traces = traces_for(100, static_cast<int>(state.range(0)), 0.2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(grad_ascent_traces(100, traces));
}
BENCHMARK(BM_GradAscentTraces)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Bma(benchmark::State& state) {
    const auto traces = traces_for(100, 10, 0.2, 6);
    for (auto _ : state) benchmark::DoNotOptimize(bma(100, traces));
}
BENCHMARK(BM_Bma);

void BM_Infiltration(benchmark::State& state) {
    Rng rng(7);
    const auto len = static_cast<std::size_t>(state.range(0));
    const Seq f = rng.random_bits(len);
    const Seq g = rng.random_bits(len);
    for (auto _ : state) benchmark::DoNotOptimize(infiltration(f, g));
}
BENCHMARK(BM_Infiltration)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
