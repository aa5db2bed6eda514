#include <benchmark/benchmark.h>

#include "sdforge/catalog.hpp"
#include "sdforge/code_analysis.hpp"
#include "sdforge/construction.hpp"
#include "sdforge/search.hpp"

using namespace sdforge;

namespace {

TableRow first_row() {
    static TableRow row = [] {
        auto rows = load_paper_tables(std::string(SDFORGE_DATA_DIR) + "/paper_tables.csv");
        return rows.front();
    }();
    return row;
}

void BM_GroupMatrixAssembly(benchmark::State& state) {
    TableRow row = first_row();
    const Construction& k = find_construction(row.construction);
    for (auto _ : state) benchmark::DoNotOptimize(k.group_matrix(row.candidate));
}
BENCHMARK(BM_GroupMatrixAssembly);

void BM_OrthogonalityCheck(benchmark::State& state) {
    TableRow row = first_row();
    BitMatrix a = find_construction(row.construction).group_matrix(row.candidate);
    for (auto _ : state) benchmark::DoNotOptimize(is_orthogonal(a));
}
BENCHMARK(BM_OrthogonalityCheck);

void BM_EvaluateFitness(benchmark::State& state) {
    TableRow row = first_row();
    const Construction& k = find_construction(row.construction);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_fitness(k, row.candidate));
}
BENCHMARK(BM_EvaluateFitness);

void BM_CombinationEnumeration(benchmark::State& state) {
    TableRow row = first_row();
    BitMatrix a = find_construction(row.construction).group_matrix(row.candidate);
    int64_t visits = 0;
    for (auto _ : state) {
        uint64_t acc = 0;
        for_each_combination(a, static_cast<int>(state.range(0)), [&](const BitVector& v, int) {
            acc += static_cast<uint64_t>(v.weight());
            ++visits;
            return true;
        });
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(visits);
}
BENCHMARK(BM_CombinationEnumeration)->Arg(4)->Arg(5);

void BM_CountLowWeights(benchmark::State& state) {
    TableRow row = first_row();
    BitMatrix g = find_construction(row.construction).generator(row.candidate);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_low_weights(g, 14, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountLowWeights)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_MinDistance(benchmark::State& state) {
    TableRow row = first_row();
    BitMatrix g = find_construction(row.construction).generator(row.candidate);
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(g));
}
BENCHMARK(BM_MinDistance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
