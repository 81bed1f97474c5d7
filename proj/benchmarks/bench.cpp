#include <benchmark/benchmark.h>

#include <random>

#include "treehelly/constructions.hpp"
#include "treehelly/counting.hpp"
#include "treehelly/extremal.hpp"
#include "treehelly/piercing.hpp"
#include "treehelly/random_gen.hpp"
#include "treehelly/tree_ops.hpp"

using namespace treehelly;

static void BM_MonomorphismCount(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    FlowerGraph fg = flower(FlowerSpec(Tree::path(5).graph(), {1, 3}, q));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_monomorphisms(Tree::path(5).graph(), fg.graph));
}
BENCHMARK(BM_MonomorphismCount)->Arg(2)->Arg(4)->Arg(8);

static void BM_MinEdgePiercing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(17);
    Tree host = random_tree(n, rng);
    SubtreeSystem sys = random_system(host, 8, rng);
    for (auto _ : state) benchmark::DoNotOptimize(min_edge_piercing(sys));
}
BENCHMARK(BM_MinEdgePiercing)->Arg(8)->Arg(12)->Arg(16);

static void BM_RecursivePiercing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(17);
    Tree host = random_tree(n, rng);
    SubtreeSystem sys = random_system(host, 8, rng);
    for (auto _ : state) benchmark::DoNotOptimize(min_edge_piercing_recursive(sys));
}
BENCHMARK(BM_RecursivePiercing)->Arg(8)->Arg(12)->Arg(16);

static void BM_SubtreeEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(23);
    Tree host = random_tree(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subtrees(host));
}
BENCHMARK(BM_SubtreeEnumeration)->Arg(10)->Arg(14)->Arg(18);

static void BM_DistinguishingExtraction(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    FlowerGraph fg = flower(FlowerSpec(Tree::path(4).graph(), {1}, q));
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_distinguishing(Tree::path(4).graph(), fg.graph, 7));
}
BENCHMARK(BM_DistinguishingExtraction)->Arg(2)->Arg(3);

static void BM_GraphEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n));
}
BENCHMARK(BM_GraphEnumeration)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
