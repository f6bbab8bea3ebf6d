#include <benchmark/benchmark.h>

#include "bcolab/b_coloring.hpp"
#include "bcolab/circulating_orientation.hpp"
#include "bcolab/generators.hpp"
#include "bcolab/reduction.hpp"

using namespace bcolab;

static void BM_SolveCircori(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto [inst, witness] = gen_yes_instance(7, n, 2, 2);
    for (auto _ : state) {
        auto o = solve_circori_brute(inst);
        benchmark::DoNotOptimize(o);
    }
    state.counters["m"] = inst.graph.edge_count();
}
BENCHMARK(BM_SolveCircori)->Arg(4)->Arg(6)->Arg(8);

static void BM_SolveCircoriRefute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CircOriInstance inst = gen_random_instance(11, n, 2 * n - 3, 3);
    for (auto _ : state) {
        auto o = solve_circori_brute(inst);
        benchmark::DoNotOptimize(o);
    }
}
BENCHMARK(BM_SolveCircoriRefute)->Arg(5)->Arg(7);

static void BM_SolveBcol(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto [g, pd] = gen_pd_graph(3, n, 2, 0.6);
    const BColInstance inst{g, 3};
    for (auto _ : state) {
        auto c = solve_bcol_brute(inst);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SolveBcol)->Arg(6)->Arg(8)->Arg(10);

static void BM_CheckBColoring(benchmark::State& state) {
    auto [inst, witness] = gen_yes_instance(5, static_cast<int>(state.range(0)), 2, 2);
    const auto red = build_instance(inst);
    const Coloring c = forward_witness(red, witness);
    const BColInstance hinst = bcol_instance(red);
    for (auto _ : state) {
        auto chk = check_b_coloring(hinst, c);
        benchmark::DoNotOptimize(chk);
    }
    state.counters["|V(H)|"] = red.h.vertex_count();
}
BENCHMARK(BM_CheckBColoring)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
