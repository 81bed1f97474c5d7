#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treehelly/constructions.hpp"
#include "treehelly/counting.hpp"
#include "treehelly/isomorphism.hpp"
#include "treehelly/tree_ops.hpp"

using namespace treehelly;

namespace {
SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}
}  // namespace

TEST_CASE("flower size formulas") {
    // q copies of P6 glued on two roots: 2 + 4*4 = 18 vertices, 4*5 = 20 edges
    FlowerGraph fg = flower(FlowerSpec(Tree::path(6).graph(), {1, 4}, 4));
    CHECK(fg.graph.n() == 18);
    CHECK(fg.graph.m() == 20);
    CHECK(fg.copy_maps.size() == 4);
    for (const auto& m : fg.copy_maps)
        CHECK(is_monomorphism(Tree::path(6).graph(), fg.graph, m));
    // every copy agrees on the roots and nowhere else
    for (int p = 1; p < 4; ++p)
        for (int v = 0; v < 6; ++v)
            CHECK((fg.copy_maps[0][v] == fg.copy_maps[p][v]) == (v == 1 || v == 4));
}

TEST_CASE("flower validation") {
    SimpleGraph p4 = Tree::path(4).graph();
    CHECK_THROWS_AS(FlowerSpec(p4, {0, 1, 2, 3}, 2), std::invalid_argument);  // not proper
    CHECK_THROWS_AS(FlowerSpec(p4, {0}, 0), std::invalid_argument);
    // the empty root set is a valid proper subset: q disjoint copies
    FlowerGraph disjoint = flower(FlowerSpec(p4, {}, 2));
    CHECK(disjoint.graph.n() == 8);
    CHECK(disjoint.graph.components().size() == 2);
    CHECK(flower(FlowerSpec(p4, {0}, 1)).graph == p4);  // q=1 is the pattern itself
}

TEST_CASE("flower family") {
    SimpleGraph p4 = Tree::path(4).graph();
    auto fam = flower_family(p4, 2, 3);
    CHECK_FALSE(fam.empty());
    for (const FlowerSpec& spec : fam) {
        CHECK(spec.multiplicity == 3);
        CHECK(spec.roots.size() < 4);
        CHECK(components_after_removal(p4, spec.roots).count >= 2);
    }
    // interior singletons qualify, leaf singletons do not
    auto has = [&](std::vector<int> r) {
        for (const auto& s : fam)
            if (s.roots == r) return true;
        return false;
    };
    CHECK(has({1}));
    CHECK(has({2}));
    CHECK_FALSE(has({0}));
    CHECK(has({1, 2}));
}

TEST_CASE("theta graphs") {
    SimpleGraph t = theta(ThetaSpec(3, 2, 2));
    CHECK(t.n() == 9);
    CHECK(t.m() == 12);  // a*c*b for segment length >= 2

    // segment length 1 collapses all strands to a path
    CHECK(theta(ThetaSpec(4, 1, 5)) == Tree::path(6).graph());

    // two strands, one segment: a plain cycle
    CHECK(is_isomorphic(theta(ThetaSpec(2, 3, 1)), cycle(6)));
    CHECK(is_isomorphic(theta(ThetaSpec(2, 4, 1)), cycle(8)));

    CHECK_THROWS_AS(ThetaSpec(0, 1, 1), std::invalid_argument);
}

TEST_CASE("theta embedding validation") {
    SimpleGraph host = theta(ThetaSpec(2, 3, 1));
    std::vector<int> identity(host.n());
    for (int i = 0; i < host.n(); ++i) identity[i] = i;
    CHECK(validate_theta_embedding(host, ThetaEmbedding(ThetaSpec(2, 3, 1), identity)));
    std::vector<int> broken = identity;
    std::swap(broken[0], broken[1]);
    CHECK_FALSE(validate_theta_embedding(host, ThetaEmbedding(ThetaSpec(2, 3, 1), broken)));
}

TEST_CASE("leaf duplication") {
    Tree t = duplicate_leaves(Tree::path(4), 3);
    CHECK(t.n() == 8);  // 2 interior + 2*3 pendants
    auto metrics = tree_metrics(t);
    CHECK(metrics.leaves.size() == 6);
    CHECK_THROWS_AS(duplicate_leaves(Tree::path(2), 2), std::invalid_argument);
    CHECK(duplicate_leaves(Tree::path(3), 1).n() == 3);
}

TEST_CASE("diameter root set") {
    DiameterRootSet rs = diameter_root_set(Tree::path(7), 2);
    CHECK(rs.roots.size() == 2);
    CHECK(rs.b == 4);  // floor((d-2)/(k-1)) with d = 6
    CHECK(components_after_removal(Tree::path(7).graph(), rs.roots).count >= 3);

    // the two-core of the flower over these roots is theta_{q,b,k-1}
    FlowerGraph fg = flower(FlowerSpec(Tree::path(7).graph(), rs.roots, 2));
    CHECK(is_isomorphic(two_core(fg.graph).core, theta(ThetaSpec(2, rs.b, 1))));

    CHECK_THROWS_AS(diameter_root_set(Tree::path(3), 2), std::invalid_argument);  // diameter < 2k
}

TEST_CASE("theta inside a path flower") {
    for (int k = 2; k <= 3; ++k) {
        Tree t = Tree::path(9);
        DiameterRootSet rs = diameter_root_set(t, k);
        FlowerSpec spec(t.graph(), rs.roots, 3);
        auto emb = find_theta_in_flower(spec, k);
        REQUIRE(emb.has_value());
        CHECK(emb->spec.strands == 3);
        CHECK(emb->spec.segment_length >= 2);
        CHECK(emb->spec.segment_length <= (9 - 3) / (k - 1));
        CHECK(validate_theta_embedding(flower(spec).graph, *emb));
    }
}
