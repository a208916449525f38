#include <benchmark/benchmark.h>

#include "kclique/construct.hpp"
#include "kclique/er.hpp"
#include "kclique/proof.hpp"
#include "kclique/solvers.hpp"

using namespace kclique;

namespace {

Graph bench_graph(int n, double p, uint64_t seed) {
    return sample_er(ErParams::with_p(n, p, seed));
}

void BM_Cliquer(benchmark::State& state) {
    Graph g = bench_graph((int)state.range(0), 0.4, 11);
    SolverOptions opts;
    opts.record_trace = false;
    for (auto _ : state) benchmark::DoNotOptimize(cliquer(g, opts).clique.size());
}
BENCHMARK(BM_Cliquer)->Arg(30)->Arg(50)->Arg(70);

void BM_MaxCliqueBB(benchmark::State& state) {
    Graph g = bench_graph((int)state.range(0), 0.4, 11);
    SolverOptions opts;
    opts.record_trace = false;
    for (auto _ : state) benchmark::DoNotOptimize(max_clique_bb(g, opts).clique.size());
}
BENCHMARK(BM_MaxCliqueBB)->Arg(30)->Arg(50)->Arg(70);

void BM_SearchProgram(benchmark::State& state) {
    int n = (int)state.range(0);
    uint64_t seed = 5;
    Graph g = bench_graph(n, 0.15, seed);
    while ((int)max_clique_brute(g).size() >= 3) g = bench_graph(n, 0.15, ++seed);
    for (auto _ : state) benchmark::DoNotOptimize(build_search_program(g, 3).size());
}
BENCHMARK(BM_SearchProgram)->Arg(10)->Arg(14);

void BM_ExtractAndConvert(benchmark::State& state) {
    int n = (int)state.range(0);
    uint64_t seed = 21;
    Graph g = bench_graph(n, 0.05, seed);
    Partition part = balanced_partition(n, 3);
    while (has_transversal_clique(g, part)) g = bench_graph(n, 0.05, ++seed);
    for (auto _ : state) {
        ExtractionResult ex = extract_robp_cliquer(g, part);
        benchmark::DoNotOptimize(robp_to_refutation(ex.program, ex.formula).length());
    }
}
BENCHMARK(BM_ExtractAndConvert)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
