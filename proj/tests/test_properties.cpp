#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "treehelly/counting.hpp"
#include "treehelly/isomorphism.hpp"
#include "treehelly/piercing.hpp"
#include "treehelly/random_gen.hpp"
#include "treehelly/tree_ops.hpp"

using namespace treehelly;

TEST_CASE("random generators are valid and seed-deterministic") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 50; ++i) {
        Tree t = random_tree(2 + i % 8, rng);
        CHECK(t.graph().connected());
        CHECK(t.graph().m() == t.n() - 1);
        Subtree s = random_subtree(t, rng);
        CHECK(t.graph().induced(s.vertices()).connected());
    }

    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 20; ++i) {
        SubtreeSystem x = random_system(random_tree(6, a), 4, a);
        SubtreeSystem y = random_system(random_tree(6, b), 4, b);
        REQUIRE(x.size() == y.size());
        for (int j = 0; j < x.size(); ++j)
            CHECK(x.members()[j].vertices() == y.members()[j].vertices());
    }
}

TEST_CASE("recursive solver agrees with the exact solver on random systems") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        Tree host = random_tree(2 + i % 7, rng);
        SubtreeSystem sys = random_system(host, 5, rng);
        auto exact = min_edge_piercing(sys);
        auto rec = min_edge_piercing_recursive(sys);
        REQUIRE(exact.size() == rec.size());
        CHECK(pierces(PiercingSet{exact, {}}, sys));
        CHECK(pierces(PiercingSet{rec, {}}, sys));
    }
}

TEST_CASE("copy counting is isomorphism-invariant") {
    std::mt19937_64 rng(5);
    for (const Tree& pattern : enumerate_trees(5)) {
        Tree host = random_tree(8, rng);
        // relabel the host by a fixed permutation
        std::vector<int> perm(host.n());
        for (int i = 0; i < host.n(); ++i) perm[i] = (i * 3 + 1) % host.n();
        SimpleGraph relabeled(host.n());
        for (auto [u, v] : host.edges()) relabeled.add_edge(perm[u], perm[v]);
        CHECK(count_copies(pattern.graph(), host.graph()) ==
              count_copies(pattern.graph(), relabeled));
    }
}

TEST_CASE("distinguishing extraction meets its bound on random hosts") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 15; ++i) {
        Tree pattern = random_tree(2 + i % 3, rng);
        Tree host = random_tree(5 + i % 4, rng);
        int64_t mon = count_monomorphisms(pattern.graph(), host.graph());
        MonomorphismFamily fam = extract_distinguishing(pattern.graph(), host.graph(), 1000 + i);
        CHECK(is_distinguishing(fam));
        int64_t tt = 1;
        for (int v = 0; v < pattern.n(); ++v) tt *= pattern.n();
        CHECK(static_cast<int64_t>(fam.members.size()) * tt >= mon);
    }
}
