#include <benchmark/benchmark.h>

#include "qcol/alexander.hpp"
#include "qcol/census.hpp"
#include "qcol/count.hpp"
#include "qcol/reduce.hpp"

using namespace qcol;

namespace {

const Census& census() {
    static const Census c = Census::load(QCOL_BENCH_DATA_DIR);
    return c;
}

ColouringMatrix matrix_of(const char* name) {
    return build_colouring_matrix(*census().lookup(name, CensusKind::diagram)->diagram);
}

void BM_BuildMatrix(benchmark::State& state) {
    const KnotDiagram& d = *census().lookup("8_18", CensusKind::diagram)->diagram;
    for (auto _ : state) benchmark::DoNotOptimize(build_colouring_matrix(d));
}
BENCHMARK(BM_BuildMatrix);

void BM_Reduce_8_18(benchmark::State& state) {
    const ColouringMatrix a = matrix_of("8_18");
    for (auto _ : state) benchmark::DoNotOptimize(reduce_matrix(a));
}
BENCHMARK(BM_Reduce_8_18);

void BM_Reduce_9_35(benchmark::State& state) {
    const ColouringMatrix a = matrix_of("9_35");
    for (auto _ : state) benchmark::DoNotOptimize(reduce_matrix(a));
}
BENCHMARK(BM_Reduce_9_35);

void BM_Alexander_9_35(benchmark::State& state) {
    const ColouringMatrix a = matrix_of("9_35");
    for (auto _ : state) benchmark::DoNotOptimize(alexander_from_matrix(a));
}
BENCHMARK(BM_Alexander_9_35);

void BM_SnfOracle_9_46(benchmark::State& state) {
    const ColouringMatrix a = matrix_of("9_46");
    const QuandleSpec q(15, 8);
    for (auto _ : state) benchmark::DoNotOptimize(count_snf_oracle(a, q));
}
BENCHMARK(BM_SnfOracle_9_46);

void BM_TypeTwoFormula(benchmark::State& state) {
    const TypeTwoData& t = *census().lookup("8_18", CensusKind::type_two)->type_two;
    const QuandleSpec q(245, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_type_two(t.alpha1, t.beta1, t.alpha2, q));
}
BENCHMARK(BM_TypeTwoFormula);

void BM_BlockBrute_9_35(benchmark::State& state) {
    const BlockData& b = *census().lookup("9_35", CensusKind::block)->block;
    const QuandleSpec q(211, 2);
    for (auto _ : state) benchmark::DoNotOptimize(count_block_brute(b.block, q));
}
BENCHMARK(BM_BlockBrute_9_35);

void BM_FullBrute_5_2(benchmark::State& state) {
    const ColouringMatrix a = matrix_of("5_2");
    const QuandleSpec q(12, 5);
    for (auto _ : state) benchmark::DoNotOptimize(count_full_brute(a, q));
}
BENCHMARK(BM_FullBrute_5_2);

}  // namespace

BENCHMARK_MAIN();
