#include <benchmark/benchmark.h>

#include "abscreen/agreement.hpp"
#include "abscreen/metrics.hpp"

#include <random>
#include <vector>

using namespace abscreen;

namespace {

std::vector<bool> random_verdicts(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<bool> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = rng() % 2;
    return out;
}

} // namespace

static void BM_ComputeMetrics(benchmark::State& state) {
    const eval::ConfusionMatrix cm{271, 118542, 882, 0};
    for (auto _ : state) {
        auto m = eval::compute_metrics(cm);
        benchmark::DoNotOptimize(&m);
    }
}
BENCHMARK(BM_ComputeMetrics);

static void BM_CohenKappa(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_verdicts(n, 1);
    const auto b = random_verdicts(n, 2);
    for (auto _ : state) {
        auto r = eval::cohen_kappa(a, b);
        benchmark::DoNotOptimize(&r);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}
BENCHMARK(BM_CohenKappa)->Arg(800)->Arg(119695);

BENCHMARK_MAIN();
