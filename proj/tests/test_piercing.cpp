#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treehelly/constructions.hpp"
#include "treehelly/counting.hpp"
#include "treehelly/piercing.hpp"

using namespace treehelly;

namespace {
using Edge = std::pair<int, int>;

SubtreeSystem p6_fixture() {
    SubtreeSystem sys(Tree::path(6));
    sys.add({0});
    sys.add({1, 2});
    sys.add({4, 5});
    return sys;
}
}  // namespace

TEST_CASE("minimum edge piercing") {
    SubtreeSystem sys = p6_fixture();
    auto edges = min_edge_piercing(sys);
    CHECK(edges == std::vector<Edge>{{0, 1}, {3, 4}});  // lex-least optimum
    CHECK(pierces(PiercingSet{edges, {}}, sys));

    auto rec = min_edge_piercing_recursive(sys);
    CHECK(rec.size() == edges.size());
    CHECK(pierces(PiercingSet{rec, {}}, sys));

    CHECK(min_edge_piercing(SubtreeSystem(Tree::path(6))).empty());

    // a single edge member needs exactly itself
    SubtreeSystem one(Tree::path(4));
    one.add({1, 2});
    CHECK(min_edge_piercing(one) == std::vector<Edge>{{0, 1}});  // any incident edge; lex-least
}

TEST_CASE("pierces predicate") {
    SubtreeSystem sys = p6_fixture();
    CHECK(pierces(PiercingSet{{{0, 1}, {4, 5}}, {}}, sys));
    CHECK_FALSE(pierces(PiercingSet{{{0, 1}}, {}}, sys));
    CHECK(pierces(PiercingSet{{{0, 1}}, {5}}, sys));
    CHECK(pierces(PiercingSet{{}, {0, 2, 4}}, sys));
}

TEST_CASE("edge Helly report") {
    SubtreeSystem sys = p6_fixture();

    HellyReport k1 = edge_helly_check(sys, 1);
    CHECK_FALSE(k1.local_ok);
    REQUIRE(k1.violating.has_value());
    CHECK(k1.violating->size() == 2);
    CHECK_FALSE(k1.global_ok);
    CHECK(k1.min_size == 2);
    CHECK(k1.verdict);  // local failure + global failure is consistent

    HellyReport k2 = edge_helly_check(sys, 2);
    CHECK(k2.local_ok);
    CHECK(k2.global_ok);
    CHECK(k2.verdict);
}

TEST_CASE("neighbor condition") {
    // members {1,2} and {3,4} interact through the edge (2,3); {0} is isolated
    // from {4,5}
    SubtreeSystem sys(Tree::path(6));
    sys.add({1, 2});
    sys.add({3, 4});
    NeighborConditionResult ok = neighbor_condition_check(sys, 1);
    CHECK(ok.ok);

    SubtreeSystem far(Tree::path(6));
    far.add({0});
    far.add({4, 5});
    NeighborConditionResult bad = neighbor_condition_check(far, 1);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violating.has_value());
    CHECK(bad.violating->size() == 2);
}

TEST_CASE("mixed piercing search") {
    SubtreeSystem sys = p6_fixture();
    CHECK_FALSE(mixed_piercing_search(sys, 1, 0).has_value());
    auto found = mixed_piercing_search(sys, 1, 1);
    REQUIRE(found.has_value());
    CHECK(pierces(*found, sys));
    CHECK(found->edges.size() <= 1);
    CHECK(found->vertices.size() <= 1);
}

TEST_CASE("mixed probe is deterministic and finds nothing at generous budgets") {
    MixedProbeResult a = mixed_helly_probe(7, 5, 2, 2, 2, 30, 42);
    MixedProbeResult b = mixed_helly_probe(7, 5, 2, 2, 2, 30, 42);
    CHECK(a.trials_run == 30);
    CHECK(a.trials_run == b.trials_run);
    CHECK(a.counterexample.has_value() == b.counterexample.has_value());
}

TEST_CASE("flower embedding validation") {
    Tree pattern = Tree::path(4);
    FlowerGraph fg = flower(FlowerSpec(pattern.graph(), {1}, 3));
    FlowerEmbedding emb{{1}, fg.copy_maps};
    CHECK(validate_flower_embedding(fg.graph, pattern, 1, emb));

    // too many required components
    CHECK_FALSE(validate_flower_embedding(fg.graph, pattern, 2, emb));

    // breaking root agreement invalidates the embedding
    FlowerEmbedding broken = emb;
    broken.maps[0][1] = broken.maps[1][2];
    CHECK_FALSE(validate_flower_embedding(fg.graph, pattern, 1, broken));
}

TEST_CASE("pierce or witness") {
    Tree pattern = Tree::path(4);

    // host = flower with four copies, canonical family at scale c = 4: the
    // root-free subtrees cannot be pierced by one edge, so a flower witness
    // must come back
    FlowerGraph fg = flower(FlowerSpec(pattern.graph(), {1}, 4));
    MonomorphismFamily fam = canonical_flower_family(fg);
    Certificate cert = pierce_or_witness(fg.graph, pattern, 1, 2, 4, fam, fam.members[0]);
    REQUIRE(cert.kind == Certificate::Kind::Witness);
    REQUIRE(cert.witness.has_value());
    CHECK(validate_flower_embedding(fg.graph, pattern, 1, *cert.witness));

    // with a generous edge budget the subtree system is always pierceable:
    // two pattern edges cover every subtree of P4
    Certificate pierced = pierce_or_witness(fg.graph, pattern, 3, 2, 4, fam, fam.members[0]);
    CHECK(pierced.kind == Certificate::Kind::Pierced);
    CHECK(pierced.piercing.edges.size() <= 3);
}

TEST_CASE("nice tuples") {
    // k = 3 interval fixture on a 12-vertex path
    SubtreeSystem sys(Tree::path(12));
    sys.add({0, 1});
    sys.add({2, 3, 4});
    sys.add({4, 5});
    sys.add({6, 7, 8});
    sys.add({8, 9});
    sys.add({10, 11});
    std::vector<std::pair<int, int>> matching{{1, 2}, {5, 6}, {9, 10}};

    auto tuple = find_nice_tuple(sys, matching);
    REQUIRE(tuple.has_value());
    CHECK(tuple->endpoints == std::vector<int>{1, 2, 5, 6, 9, 10});
    CHECK(tuple->trees.size() == 6);
    CHECK(tuple->trees[0].vertices() == std::vector<int>{0, 1});
    CHECK(tuple->trees[1].vertices() == std::vector<int>{2, 3, 4});

    // small-tree location: t = 11, k = 3 -> some interstitial tree has at most
    // (11-3)/2 - 1 = 3 vertices
    int pos = small_tree_locate(*tuple, 11, 3);
    CHECK(pos > 1);
    CHECK(pos < 6);
    CHECK(tuple->trees[pos - 1].size() <= 3);

    CHECK_THROWS_AS(small_tree_locate(*tuple, 11, 2), std::invalid_argument);  // k < 3
    CHECK_THROWS_AS(small_tree_locate(*tuple, 10, 3), std::invalid_argument);  // t = 2 mod (k-1)

    // a matching endpoint with no exclusive member: no tuple
    SubtreeSystem sparse(Tree::path(12));
    sparse.add({0, 1, 2});  // contains both endpoints of (1,2)
    CHECK_FALSE(find_nice_tuple(sparse, matching).has_value());
}
