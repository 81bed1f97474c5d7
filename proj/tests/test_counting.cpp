#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treehelly/constructions.hpp"
#include "treehelly/counting.hpp"
#include "treehelly/graph.hpp"

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

TEST_CASE("monomorphism counts against independently frozen values") {
    CHECK(count_monomorphisms(Tree::path(3).graph(), complete(4)) == 24);
    CHECK(count_monomorphisms(Tree::path(4).graph(), complete(5)) == 120);
    CHECK(count_monomorphisms(Tree::path(3).graph(), cycle(5)) == 10);
    CHECK(count_monomorphisms(Tree::star(3).graph(), complete(4)) == 24);
    CHECK(count_monomorphisms(Tree::path(5).graph(), Tree::path(6).graph()) == 4);
    CHECK(count_monomorphisms(complete(3), complete(5)) == 60);
    // mon(K2, G) = 2 m(G)
    for (const SimpleGraph& g : {complete(5), cycle(7), Tree::star(6).graph()})
        CHECK(count_monomorphisms(Tree::path(2).graph(), g) == 2 * g.m());
}

TEST_CASE("enumeration order and cap") {
    auto all = enumerate_monomorphisms(Tree::path(3).graph(), complete(4));
    CHECK(all.maps.size() == 24);
    CHECK_FALSE(all.truncated);
    CHECK(all.maps.front() == Monomorphism{0, 1, 2});  // lexicographic in the image array
    CHECK(std::is_sorted(all.maps.begin(), all.maps.end()));

    auto capped = enumerate_monomorphisms(Tree::path(3).graph(), complete(4), 5);
    CHECK(capped.maps.size() == 5);
    CHECK(capped.truncated);
    CHECK(std::equal(capped.maps.begin(), capped.maps.end(), all.maps.begin()));
}

TEST_CASE("automorphisms and copies") {
    CHECK(automorphism_count(Tree::path(6).graph()) == 2);
    CHECK(automorphism_count(Tree::star(4).graph()) == 24);
    CHECK(automorphism_count(complete(4)) == 24);
    CHECK(automorphism_count(cycle(5)) == 10);
    CHECK(count_copies(Tree::path(3).graph(), complete(4)) == 12);
    CHECK(count_copies(complete(3), complete(5)) == 10);
}

TEST_CASE("distinguishing families") {
    SimpleGraph pattern = Tree::path(3).graph();
    SimpleGraph host = complete(4);
    MonomorphismFamily fam = extract_distinguishing(pattern, host, 11);
    CHECK(is_distinguishing(fam));
    REQUIRE(fam.partition.has_value());
    // guaranteed size: mon / t^t = 24 / 27
    CHECK(static_cast<int64_t>(fam.members.size()) * 27 >= 24);

    // determinism: same seed, same family
    MonomorphismFamily again = extract_distinguishing(pattern, host, 11);
    CHECK(fam.members == again.members);

    // a family with clashing images is not distinguishing
    MonomorphismFamily bad{pattern, host, {{0, 1, 2}, {1, 0, 3}}, std::nullopt};
    CHECK_FALSE(is_distinguishing(bad));
}

TEST_CASE("canonical flower family") {
    FlowerGraph fg = flower(FlowerSpec(Tree::path(5).graph(), {1, 2}, 3));
    MonomorphismFamily fam = canonical_flower_family(fg);
    CHECK(fam.members.size() == 3);
    CHECK(is_distinguishing(fam));
    for (const auto& m : fam.members) CHECK(is_monomorphism(fg.spec.pattern, fg.graph, m));
}

TEST_CASE("sunflower extraction") {
    // all of Mon(P3, K_{1,5}): kernel is the middle vertex's class
    SimpleGraph pattern = Tree::path(3).graph();
    SimpleGraph host = Tree::star(5).graph();
    MonomorphismFamily fam{pattern, host, enumerate_monomorphisms(pattern, host).maps,
                           std::nullopt};
    auto sf = sunflower_extract(fam, 2);
    REQUIRE(sf.has_value());
    CHECK(validate_sunflower(fam, *sf));

    // the canonical family of a flower is a sunflower with the roots as kernel
    FlowerGraph fg = flower(FlowerSpec(Tree::path(5).graph(), {1, 2}, 4));
    MonomorphismFamily cf = canonical_flower_family(fg);
    auto sf2 = sunflower_extract(cf, 4);
    REQUIRE(sf2.has_value());
    CHECK(sf2->kernel == std::vector<int>{1, 2});
    CHECK(sf2->petals.size() == 4);
    CHECK(validate_sunflower(cf, *sf2));

    // asking for more petals than members fails cleanly
    CHECK_FALSE(sunflower_extract(cf, 5).has_value());

    // validation rejects petals that disagree on the kernel
    Sunflower broken = *sf2;
    broken.petals[0][1] = broken.petals[1][3];
    CHECK_FALSE(validate_sunflower(cf, broken));
}

TEST_CASE("extendable sets and highly extendable subtrees") {
    Tree pattern = Tree::path(3);
    FlowerGraph fg = flower(FlowerSpec(pattern.graph(), {0}, 5));
    MonomorphismFamily fam = canonical_flower_family(fg);
    const Monomorphism& phi = fam.members[0];

    // the whole pattern has no neighborhood: all 5 members restrict distinctly
    Subtree whole(pattern, {0, 1, 2});
    auto psi = extendable_set(pattern, whole, {}, fam);
    CHECK(psi.restrictions.size() == 5);

    // the root is fixed by every member; its extendable set at phi's anchor is
    // just phi's own restriction
    Subtree root_only(pattern, {0});
    auto psi_root = extendable_set(pattern, root_only, {phi[1]}, fam);
    CHECK(psi_root.restrictions.size() == 1);

    SubtreeSystem sys1 = highly_extendable_subtrees(pattern, phi, fam, 1);
    CHECK(sys1.size() == 6);  // every subtree of P3 qualifies at c = 1
    // only the whole pattern and the root-free branch see all 5 copies
    SubtreeSystem sys5 = highly_extendable_subtrees(pattern, phi, fam, 5);
    CHECK(sys5.size() == 2);
}

TEST_CASE("pseudo piercing") {
    Tree pattern = Tree::path(3);
    FlowerGraph fg = flower(FlowerSpec(pattern.graph(), {0}, 5));
    MonomorphismFamily fam = canonical_flower_family(fg);
    const Monomorphism& phi = fam.members[0];

    // conditioning on nothing: the root image is a single value (pseudo
    // pierced), the far endpoint takes 5 > v(T) values (not pierced)
    CHECK(pseudo_pierces({}, Subtree(pattern, {0}), phi, fam));
    CHECK_FALSE(pseudo_pierces({}, Subtree(pattern, {2}), phi, fam));
    // conditioning on the far endpoint pins the whole copy
    CHECK(pseudo_pierces({2}, Subtree(pattern, {2}), phi, fam));
}

TEST_CASE("refinement conditions on a flower fixture") {
    Tree pattern = Tree::path(3);
    FlowerGraph fg = flower(FlowerSpec(pattern.graph(), {0}, 5));
    MonomorphismFamily fam = canonical_flower_family(fg);
    int64_t mon = count_monomorphisms(pattern.graph(), fg.graph);

    RefinementReport rep =
        check_refinement_conditions(pattern, {fam, fam}, {1}, 1, mon, 0, 0);
    CHECK(rep.level_sizes == std::vector<int64_t>{5, 5});
    CHECK(rep.s1_nested_distinguishing);
    CHECK(rep.s2_common_system);
    CHECK(rep.common_system.size() == 6);
    CHECK(rep.s3_disjoint_extensions);
    CHECK(rep.s4_not_pseudo_pierced);
    CHECK(rep.s5_size_bound);

    // a non-nested pair violates S1
    MonomorphismFamily other = fam;
    std::swap(other.members[0][1], other.members[0][2]);
    if (is_monomorphism(pattern.graph(), fg.graph, other.members[0])) {
        RefinementReport bad =
            check_refinement_conditions(pattern, {fam, other}, {1}, 1, mon, 0, 0);
        CHECK_FALSE(bad.s1_nested_distinguishing);
    }
    CHECK_THROWS_AS(check_refinement_conditions(pattern, {fam, fam}, {}, 1, mon, 0, 0),
                    std::invalid_argument);
}
