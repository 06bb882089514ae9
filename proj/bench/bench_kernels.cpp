// Serial reference vs OpenMP kernels. Run with --benchmark_filter=... as usual;
// set OMP_NUM_THREADS to vary the parallel side.

#include <benchmark/benchmark.h>

#include <random>

#include "nht/kernels.hpp"
#include "nht/search.hpp"

namespace {

using nht::Int;
using nht::Residue;

std::vector<Int> random_ints(std::size_t n) {
    std::mt19937_64 rng(n);
    std::vector<Int> v(n);
    for (auto& x : v) x = static_cast<Int>(rng() % 65536);
    return v;
}

std::vector<Residue> random_residues(std::size_t n, Residue q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Residue> v(n);
    for (auto& x : v) x = rng() % q;
    return v;
}

template <bool Parallel>
void BM_LagSums(benchmark::State& state) {
    const auto g = random_ints(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto out = Parallel ? nht::kernels::parallel::circular_lag_sums(g) : nht::kernels::serial::circular_lag_sums(g);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_CrossSums(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_residues(n, 21851, 1);
    const auto b = random_residues(n, 21851, 2);
    for (auto _ : state) {
        auto out = Parallel ? nht::kernels::parallel::circular_cross_sums(a, b)
                            : nht::kernels::serial::circular_cross_sums(a, b);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_CirculantApply(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const Residue q = 7283;
    auto row = random_residues(dim, q, 3);
    for (std::size_t i = 1; i < dim; i += 2) row[i] = 0;
    const auto x = random_residues(dim, q, 4);
    for (auto _ : state) {
        auto y = Parallel ? nht::kernels::parallel::circulant_apply(row, x, q, false)
                          : nht::kernels::serial::circulant_apply(row, x, q, false);
        benchmark::DoNotOptimize(y.data());
    }
}

template <bool Parallel>
void BM_Gram(benchmark::State& state) {
    auto row = random_ints(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 1; i < row.size(); i += 2) row[i] = 0;
    for (auto _ : state) {
        auto m = Parallel ? nht::kernels::parallel::circulant_gram(row) : nht::kernels::serial::circulant_gram(row);
        benchmark::DoNotOptimize(m.data.data());
    }
}

template <nht::Execution Exec>
void BM_SearchSeeds(benchmark::State& state) {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 2; s < static_cast<std::uint64_t>(state.range(0)); ++s) seeds.push_back(s);
    nht::SearchOptions opts;
    opts.n = 24;
    opts.prime_only = true;
    opts.execution = Exec;
    for (auto _ : state) {
        auto r = nht::search_seeds(seeds, opts);
        benchmark::DoNotOptimize(r.candidates.data());
    }
}

}  // namespace

BENCHMARK(BM_LagSums<false>)->Name("lag_sums/serial")->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_LagSums<true>)->Name("lag_sums/parallel")->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_CrossSums<false>)->Name("cross_sums/serial")->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_CrossSums<true>)->Name("cross_sums/parallel")->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_CirculantApply<false>)->Name("circulant_apply/serial")->RangeMultiplier(4)->Range(32, 8192);
BENCHMARK(BM_CirculantApply<true>)->Name("circulant_apply/parallel")->RangeMultiplier(4)->Range(32, 8192);
BENCHMARK(BM_Gram<false>)->Name("gram/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Gram<true>)->Name("gram/parallel")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_SearchSeeds<nht::Execution::serial>)->Name("search_seeds/serial")->Arg(2000);
BENCHMARK(BM_SearchSeeds<nht::Execution::parallel>)->Name("search_seeds/parallel")->Arg(2000);

BENCHMARK_MAIN();
