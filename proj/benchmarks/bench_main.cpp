#include <benchmark/benchmark.h>

#include <random>

#include "dualmod/bit_matrix.hpp"
#include "dualmod/linalg.hpp"
#include "dualmod/module_splitter.hpp"
#include "dualmod/specht.hpp"
#include "dualmod/tabloid.hpp"

using namespace dualmod;

namespace {

BitMatrixF2 random_f2(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    BitMatrixF2 m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1u);
    return m;
}

MatrixF4 random_f4(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    return MatrixF4(random_f2(r, c, rng), random_f2(r, c, rng));
}

}  // namespace

static void BM_F2Multiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_f2(n, n, rng), b = random_f2(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_F2Multiply)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_F4Multiply(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_f4(n, n, rng), b = random_f4(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_F4Multiply)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_F2Rank(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_f2(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_F2Rank)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_F4Rank(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_f4(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_F4Rank)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_TabloidRank(benchmark::State& state) {
    const Partition lambda({5, 4, 3, 1});
    const TabloidIndexer idx(lambda);
    std::mt19937_64 rng(5);
    std::vector<Tabloid> sample;
    for (int i = 0; i < 1024; ++i) sample.push_back(idx.unrank(rng() % idx.count()));
    for (auto _ : state)
        for (const auto& t : sample) benchmark::DoNotOptimize(idx.rank(t));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sample.size()));
}
BENCHMARK(BM_TabloidRank);

static void BM_TabloidUnrank(benchmark::State& state) {
    const TabloidIndexer idx(Partition({5, 4, 3, 1}));
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(idx.unrank(i));
        i = (i + 7919) % idx.count();
    }
}
BENCHMARK(BM_TabloidUnrank);

static void BM_BuildDModule(benchmark::State& state) {
    const Partition shapes[] = {Partition({4, 3, 2}), Partition({5, 3, 2, 1}), Partition({6, 4, 1})};
    const Partition& lambda = shapes[state.range(0)];
    for (auto _ : state) benchmark::DoNotOptimize(specht::build_d_module(lambda));
    state.SetLabel(lambda.to_string());
}
BENCHMARK(BM_BuildDModule)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Commutant(benchmark::State& state) {
    const Partition shapes[] = {Partition({4, 3, 2}), Partition({5, 4, 2}), Partition({6, 4, 1})};
    const Partition& lambda = shapes[state.range(0)];
    const auto alt = splitter::restrict_to_alternating(specht::rep_d_lambda(lambda));
    const auto gens = splitter::generating_set(alt);
    for (auto _ : state) benchmark::DoNotOptimize(solve_commutant(gens));
    state.SetLabel(lambda.to_string() + " dim " + std::to_string(alt.dim()));
}
BENCHMARK(BM_Commutant)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_HomStackedVsSpin(benchmark::State& state) {
    const auto alt = splitter::restrict_to_alternating(specht::rep_d_lambda(Partition({4, 2, 1})));
    const auto gens = splitter::generating_set(alt);
    for (auto _ : state) {
        if (state.range(0) == 0)
            benchmark::DoNotOptimize(hom_basis_stacked(gens, gens));
        else
            benchmark::DoNotOptimize(hom_basis_spin(gens, gens));
    }
    state.SetLabel(state.range(0) == 0 ? "stacked" : "spin");
}
BENCHMARK(BM_HomStackedVsSpin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
