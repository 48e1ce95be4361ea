#include <benchmark/benchmark.h>

#include "asyncflow/analysis.hpp"
#include "asyncflow/flow.hpp"
#include "asyncflow/generate.hpp"
#include "asyncflow/signal.hpp"
#include "asyncflow/theorems.hpp"

namespace af = asyncflow;

static void BM_DiscreteFlowAt(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    af::Rng rng = af::derive_rng(1, 0, 0);
    const af::Network net = af::random_network(rng, n);
    const af::State mu = af::random_state(rng, n);
    const auto alpha = af::random_progressive_compfn(rng, n, {8, 8, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::discrete_flow_at(net, mu, alpha, 10000));
    }
    state.SetItemsProcessed(state.iterations() * 10001);
}
BENCHMARK(BM_DiscreteFlowAt)->Arg(2)->Arg(8)->Arg(16);

static void BM_DiscreteFlowSignal(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    af::Rng rng = af::derive_rng(1, 1, 0);
    const af::Network net = af::random_network(rng, n);
    const af::State mu = af::random_state(rng, n);
    const auto alpha = af::random_progressive_compfn(rng, n, {8, 8, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::discrete_flow_signal(net, mu, alpha));
    }
}
BENCHMARK(BM_DiscreteFlowSignal)->Arg(4)->Arg(12)->Arg(20);

static void BM_SignalsEqual(benchmark::State& state)
{
    af::Rng rng = af::derive_rng(1, 2, 0);
    const af::Network net = af::random_network(rng, 6);
    const af::State mu = af::random_state(rng, 6);
    const af::RealCompFn rho(af::random_progressive_compfn(rng, 6, {}), af::random_time_seq(rng, {}));
    const af::RealSignal x = af::real_flow_signal(net, mu, rho);
    const af::RealSignal y = af::shift_signal_real(x, x.times().at(0) - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::signals_equal(x, y));
    }
}
BENCHMARK(BM_SignalsEqual);

static void BM_BuildDiagram(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    af::Rng rng = af::derive_rng(1, 3, 0);
    const af::Network net = af::random_network(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::build_diagram(net));
    }
}
BENCHMARK(BM_BuildDiagram)->Arg(3)->Arg(6)->Arg(8);

static void BM_FuzzSuite(benchmark::State& state)
{
    af::FuzzConfig config;
    config.trials = 1000;
    config.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::run_fuzz_suite(config).passed());
    }
    state.SetItemsProcessed(state.iterations() * 1000 * af::checker_names().size());
}
BENCHMARK(BM_FuzzSuite)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ExhaustiveSmall(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(af::run_exhaustive_small().passed());
    }
}
BENCHMARK(BM_ExhaustiveSmall)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
