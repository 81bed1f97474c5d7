#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "treehelly/codec.hpp"
#include "treehelly/graph.hpp"
#include "treehelly/isomorphism.hpp"
#include "treehelly/tree_ops.hpp"

using namespace treehelly;

namespace {
SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}
SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}
}  // namespace

TEST_CASE("SimpleGraph basics") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 2);  // duplicate is a no-op
    CHECK(g.n() == 4);
    CHECK(g.m() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);

    auto comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK_FALSE(g.connected());

    SimpleGraph sub = g.induced({0, 1, 2});
    CHECK(sub.n() == 3);
    CHECK(sub.m() == 2);
}

TEST_CASE("bipartiteness") {
    std::vector<int> coloring;
    CHECK(Tree::path(6).graph().bipartite(&coloring));
    CHECK(coloring.size() == 6);
    CHECK(cycle(4).bipartite());
    CHECK_FALSE(cycle(5).bipartite());
    CHECK_FALSE(complete(3).bipartite());
}

TEST_CASE("Tree validation and constructors") {
    CHECK(Tree::path(1).n() == 1);
    CHECK(Tree::path(6).edges().size() == 5);
    CHECK(Tree::star(4).n() == 5);
    CHECK(Tree::star(4).degree(0) == 4);
    CHECK_THROWS_AS(Tree{cycle(3)}, std::invalid_argument);
    SimpleGraph disconnected(4);
    disconnected.add_edge(0, 1);
    CHECK_THROWS_AS(Tree{disconnected}, std::invalid_argument);
}

TEST_CASE("Subtree and SubtreeSystem") {
    Tree host = Tree::path(6);
    Subtree s(host, {2, 1, 3});  // sorted internally
    CHECK(s.vertices() == std::vector<int>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));
    CHECK_THROWS_AS(Subtree(host, {0, 2}), std::invalid_argument);  // disconnected
    CHECK_THROWS_AS(Subtree(host, {}), std::invalid_argument);

    SubtreeSystem sys(host);
    sys.add({0});
    sys.add({1, 2});
    sys.add({1, 2});  // duplicates permitted
    CHECK(sys.size() == 3);
    CHECK(sys.members()[1].size() == 2);
}

TEST_CASE("graph6 codec against independently frozen strings") {
    CHECK(encode_graph6(Tree::path(4).graph()) == "Ch");
    CHECK(encode_graph6(Tree::path(6).graph()) == "EhCG");
    CHECK(encode_graph6(Tree::star(4).graph()) == "Ds_");
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(cycle(5)) == "Dhc");
}

TEST_CASE("codec round trips and errors") {
    for (const SimpleGraph& g :
         {Tree::path(7).graph(), Tree::star(5).graph(), complete(5), cycle(6), SimpleGraph(1)}) {
        CHECK(decode_graph6(encode_graph6(g)) == g);
        CHECK(decode_edge_list(encode_edge_list(g)) == g);
        CHECK(decode_graph(encode_graph6(g)) == g);
        CHECK(decode_graph(encode_edge_list(g)) == g);
    }
    CHECK_THROWS_AS(decode_graph6("E\x01"), CodecError);
    try {
        decode_graph6("");
        FAIL("expected CodecError");
    } catch (const CodecError& e) {
        CHECK(e.offset() == 0);
    }
    std::string dot = encode_dot(Tree::path(3).graph());
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}

TEST_CASE("tree metrics") {
    TreeMetrics p6 = tree_metrics(Tree::path(6));
    CHECK(p6.diameter == 5);
    CHECK(p6.leaves == std::vector<int>{0, 5});
    CHECK(p6.longest_path == std::vector<int>{0, 1, 2, 3, 4, 5});

    TreeMetrics s4 = tree_metrics(Tree::star(4));
    CHECK(s4.diameter == 2);
    CHECK(s4.leaves == std::vector<int>{1, 2, 3, 4});

    CHECK(tree_metrics(Tree::path(1)).diameter == 0);
}

TEST_CASE("two-core") {
    TwoCoreResult of_tree = two_core(Tree::path(5).graph());
    CHECK(of_tree.core.n() == 0);
    CHECK(of_tree.survivors.empty());

    TwoCoreResult of_cycle = two_core(cycle(5));
    CHECK(of_cycle.core.n() == 5);
    CHECK(of_cycle.core.m() == 5);

    // cycle with a pendant path: the core is the cycle alone
    SimpleGraph g = cycle(4);
    SimpleGraph h(6);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(0, 4);
    h.add_edge(4, 5);
    TwoCoreResult res = two_core(h);
    CHECK(res.core.n() == 4);
    CHECK(res.survivors == std::vector<int>{0, 1, 2, 3});
    CHECK(res.relabel[5] == -1);
}

TEST_CASE("removal components and neighborhoods") {
    auto rem = components_after_removal(Tree::path(6).graph(), {2, 4});
    CHECK(rem.count == 3);
    CHECK(rem.components[0] == std::vector<int>{0, 1});
    CHECK(rem.components[1] == std::vector<int>{3});
    CHECK(rem.components[2] == std::vector<int>{5});

    Tree host = Tree::path(6);
    CHECK(neighborhood(host, Subtree(host, {2, 3})) == std::vector<int>{1, 4});
    CHECK(neighborhood(host, Subtree(host, {0})) == std::vector<int>{1});
}

TEST_CASE("subtree enumeration") {
    CHECK(enumerate_subtrees(Tree::path(3)).size() == 6);
    CHECK(enumerate_subtrees(Tree::star(3)).size() == 11);
    auto small = enumerate_subtrees(Tree::path(4), 2);
    CHECK(small.size() == 7);  // 4 singletons + 3 edges
    CHECK(small.front().size() == 1);
    CHECK(small.back().size() == 2);
}

TEST_CASE("isomorphism") {
    SimpleGraph p4_shuffled(4);
    p4_shuffled.add_edge(2, 0);
    p4_shuffled.add_edge(0, 3);
    p4_shuffled.add_edge(3, 1);
    CHECK(is_isomorphic(Tree::path(4).graph(), p4_shuffled));
    CHECK_FALSE(is_isomorphic(Tree::path(4).graph(), Tree::star(3).graph()));

    auto witness = find_isomorphism(Tree::path(4).graph(), p4_shuffled);
    REQUIRE(witness.has_value());
    for (auto [u, v] : Tree::path(4).edges())
        CHECK(p4_shuffled.adjacent((*witness)[u], (*witness)[v]));

    CHECK(canonical_key(Tree::path(4).graph()) == canonical_key(p4_shuffled));
    CHECK(canonical_key(Tree::path(4).graph()) != canonical_key(Tree::star(3).graph()));
}

TEST_CASE("tree enumeration and canonical keys") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_trees(n).size() == size_t(expected[n - 1]));

    for (const Tree& t : enumerate_trees(7))
        for (const Tree& u : enumerate_trees(7))
            CHECK((tree_canonical_key(t) == tree_canonical_key(u)) ==
                  is_isomorphic(t.graph(), u.graph()));
}
