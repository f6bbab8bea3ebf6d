#include <benchmark/benchmark.h>

#include "bcolab/generators.hpp"
#include "bcolab/path_decomposition.hpp"
#include "bcolab/reduction.hpp"

using namespace bcolab;

static void BM_BuildInstance(benchmark::State& state) {
    auto [inst, witness] = gen_yes_instance(13, static_cast<int>(state.range(0)), 2, 2);
    for (auto _ : state) {
        auto red = build_instance(inst);
        benchmark::DoNotOptimize(red);
    }
    auto red = build_instance(inst);
    state.counters["|V(H)|"] = red.h.vertex_count();
}
BENCHMARK(BM_BuildInstance)->Arg(4)->Arg(6)->Arg(8);

static void BM_ForwardWitness(benchmark::State& state) {
    auto [inst, witness] = gen_yes_instance(13, static_cast<int>(state.range(0)), 2, 2);
    const auto red = build_instance(inst);
    for (auto _ : state) {
        Coloring c = forward_witness(red, witness);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ForwardWitness)->Arg(4)->Arg(6)->Arg(8);

static void BM_ExtractOrientation(benchmark::State& state) {
    auto [inst, witness] = gen_yes_instance(13, static_cast<int>(state.range(0)), 2, 2);
    const auto red = build_instance(inst);
    const Coloring c = forward_witness(red, witness);
    for (auto _ : state) {
        Orientation o = extract_orientation(red, c);
        benchmark::DoNotOptimize(o);
    }
}
BENCHMARK(BM_ExtractOrientation)->Arg(4)->Arg(6)->Arg(8);

static void BM_LiftPd(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    auto [g, pd] = gen_pd_graph(21, w + 7, w, 0.4);
    Rng rng(77);
    std::vector<int> weights;
    for (int i = 0; i < g.edge_count(); ++i) weights.push_back(2 * rng.uniform_int(1, 2));
    const auto red = build_instance(CircOriInstance::build(g, weights));
    for (auto _ : state) {
        PathDecomposition lifted = build_pd_for_H(red, pd);
        benchmark::DoNotOptimize(lifted);
    }
    state.counters["|V(H)|"] = red.h.vertex_count();
}
BENCHMARK(BM_LiftPd)->Arg(1)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
