#include <benchmark/benchmark.h>

#include "hecke/block_engine.hpp"
#include "hecke/group_blocks.hpp"
#include "hecke/store.hpp"

using namespace hecke;

namespace {

const Database &db() {
    static const Database d = Database::open(HECKE_TEST_DATA);
    return d;
}

const IntVec g7_spec{3, -1, 2, 5, -4, 1, 0, 7};

void BM_sum_aA_serial(benchmark::State &st) {
    const auto &g = db().get("G7");
    for (auto _ : st) benchmark::DoNotOptimize(sum_aA_serial(g, g7_spec));
}

void BM_sum_aA_parallel(benchmark::State &st) {
    const auto &g = db().get("G7");
    for (auto _ : st) benchmark::DoNotOptimize(sum_aA(g, g7_spec));
}

void BM_p_blocks_serial(benchmark::State &st) {
    const auto &t = *db().get("G4").character_table;
    for (auto _ : st) benchmark::DoNotOptimize(p_blocks_serial(t, st.range(0)));
}

void BM_p_blocks_parallel(benchmark::State &st) {
    const auto &t = *db().get("G4").character_table;
    for (auto _ : st) benchmark::DoNotOptimize(p_blocks(t, st.range(0)));
}

void BM_rouquier_from_schur(benchmark::State &st) {
    const auto &g = db().get("G4");
    EngineOptions opt;
    opt.parallel = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(rouquier_from_schur(g, {0, 1, 2}, opt));
}

}  // namespace

BENCHMARK(BM_sum_aA_serial);
BENCHMARK(BM_sum_aA_parallel);
BENCHMARK(BM_p_blocks_serial)->Arg(2)->Arg(3);
BENCHMARK(BM_p_blocks_parallel)->Arg(2)->Arg(3);
BENCHMARK(BM_rouquier_from_schur)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
