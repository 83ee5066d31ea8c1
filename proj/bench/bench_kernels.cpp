// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "htdet/hessenberg.hpp"
#include "htdet/paths.hpp"
#include "htdet/trudi.hpp"

using htdet::Execution;
using htdet::Integer;

namespace {

htdet::hessenberg::DenseMatrix random_matrix(std::size_t n) {
    std::mt19937_64 gen(n);
    htdet::hessenberg::DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Integer(static_cast<long>(gen() % 19) - 9);
    }
    return m;
}

std::vector<Integer> random_entries(int n) {
    std::mt19937_64 gen(static_cast<std::uint64_t>(n));
    std::vector<Integer> a;
    for (int i = 0; i < n; ++i) a.emplace_back(static_cast<long>(gen() % 19) - 9);
    return a;
}

void fraction_free(benchmark::State& state, Execution exec) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(htdet::hessenberg::det_fraction_free(m, exec));
}

void composition_sum(benchmark::State& state, Execution exec) {
    const auto a = random_entries(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(htdet::trudi::trudi_composition_sum(Integer(-1), a, 22, exec));
}

void path_tally(benchmark::State& state, Execution exec) {
    const htdet::paths::PathFamily family{htdet::paths::Family::A, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(htdet::paths::tally(family, {}, exec));
}

}  // namespace

BENCHMARK_CAPTURE(fraction_free, serial, Execution::serial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(fraction_free, parallel, Execution::parallel)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(composition_sum, serial, Execution::serial)->Arg(14)->Arg(18);
BENCHMARK_CAPTURE(composition_sum, parallel, Execution::parallel)->Arg(14)->Arg(18);
BENCHMARK_CAPTURE(path_tally, serial, Execution::serial)->Arg(6)->Arg(7);
BENCHMARK_CAPTURE(path_tally, parallel, Execution::parallel)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
