#include "treehelly/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "subset_iter.hpp"
#include "treehelly/codec.hpp"
#include "treehelly/constructions.hpp"
#include "treehelly/counting.hpp"
#include "treehelly/extremal.hpp"
#include "treehelly/isomorphism.hpp"
#include "treehelly/piercing.hpp"
#include "treehelly/random_gen.hpp"
#include "treehelly/tree_ops.hpp"

namespace treehelly {

namespace {

std::string plural(int64_t n, const std::string& what) {
    return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// Plain enumeration oracle: lexicographically least minimum edge piercing.
std::optional<std::vector<std::pair<int, int>>> oracle_min_edges(const SubtreeSystem& sys) {
    const auto edges = sys.host().edges();
    const auto& members = sys.members();
    std::optional<std::vector<std::pair<int, int>>> result;
    detail::for_each_combination(
        static_cast<int>(edges.size()), static_cast<int>(edges.size()),
        [&](const std::vector<int>& idx) {
            for (const auto& member : members) {
                bool hit = false;
                for (int e : idx)
                    if (member.contains(edges[e].first) || member.contains(edges[e].second)) {
                        hit = true;
                        break;
                    }
                if (!hit) return false;
            }
            std::vector<std::pair<int, int>> out;
            for (int e : idx) out.push_back(edges[e]);
            result = std::move(out);
            return true;
        });
    return result;
}

}  // namespace

CheckResult check_edge_helly_exhaustive() {
    CheckResult res{"edge-helly-exhaustive", false, ""};
    Tree host = Tree::path(6);
    std::vector<Subtree> subtrees = enumerate_subtrees(host);

    int64_t systems = 0, violations = 0;
    detail::for_each_combination(
        static_cast<int>(subtrees.size()), 6, [&](const std::vector<int>& idx) {
            if (idx.empty()) return false;
            SubtreeSystem sys(host);
            for (int i : idx) sys.add(subtrees[i]);
            ++systems;
            for (int k : {1, 2})
                if (!edge_helly_check(sys, k).verdict) ++violations;
            return false;
        });

    res.pass = violations == 0;
    res.detail = plural(systems, "system") + " over P6, k in {1,2}, " +
                 plural(violations, "local-ok/global-fail verdict");
    return res;
}

CheckResult check_edge_helly_randomized(uint64_t seed) {
    CheckResult res{"edge-helly-randomized", false, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(2, 9);

    int64_t violations = 0;
    const int trials = 10000;
    for (int trial = 0; trial < trials; ++trial) {
        Tree host = random_tree(order(rng), rng);
        SubtreeSystem sys = random_system(host, 8, rng);
        for (int k : {1, 2, 3}) {
            auto rep = edge_helly_check(sys, k);
            if (!rep.verdict) ++violations;
            // Companion property: the neighbor condition forces k edges.
            if (neighbor_condition_check(sys, k).ok &&
                static_cast<int>(min_edge_piercing(sys).size()) > k)
                ++violations;
        }
    }
    res.pass = violations == 0;
    res.detail = plural(trials, "seeded system") + ", k in {1,2,3}, " +
                 plural(violations, "counterexample");
    return res;
}

CheckResult check_solver_oracle_equivalence(uint64_t seed) {
    CheckResult res{"solver-oracle-equivalence", false, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(2, 8);

    int64_t mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Tree host = random_tree(order(rng), rng);
        SubtreeSystem sys = random_system(host, 6, rng);
        auto oracle = oracle_min_edges(sys);
        auto exact = min_edge_piercing(sys);
        auto recursive = min_edge_piercing_recursive(sys);
        if (!oracle || *oracle != exact || recursive.size() != oracle->size()) ++mismatches;
        PiercingSet check{recursive, {}};
        if (!pierces(check, sys)) ++mismatches;
    }

    std::uniform_int_distribution<int> budget(0, 2);
    for (int trial = 0; trial < 500; ++trial) {
        Tree host = random_tree(order(rng), rng);
        SubtreeSystem sys = random_system(host, 6, rng);
        int a = budget(rng), b = budget(rng);
        auto found = mixed_piercing_search(sys, a, b);
        // Independent oracle over raw bitmasks.
        bool exists = false;
        const auto edges = sys.host().edges();
        for (uint32_t em = 0; em < (1u << edges.size()) && !exists; ++em) {
            if (__builtin_popcount(em) > a) continue;
            for (uint32_t vm = 0; vm < (1u << host.n()) && !exists; ++vm) {
                if (__builtin_popcount(vm) > b) continue;
                PiercingSet p;
                for (size_t e = 0; e < edges.size(); ++e)
                    if (em & (1u << e)) p.edges.push_back(edges[e]);
                for (int v = 0; v < host.n(); ++v)
                    if (vm & (1u << v)) p.vertices.push_back(v);
                if (pierces(p, sys)) exists = true;
            }
        }
        if (found.has_value() != exists) ++mismatches;
        if (found && !pierces(*found, sys)) ++mismatches;
    }

    res.pass = mismatches == 0;
    res.detail = "1000 edge + 500 mixed instances, " + std::to_string(mismatches) +
                 " mismatches (against subset-enumeration oracles)";
    return res;
}

CheckResult check_counting_identities() {
    CheckResult res{"counting-identities", false, ""};
    int64_t failures = 0;

    std::vector<Tree> patterns;
    for (int n = 2; n <= 5; ++n)
        for (const Tree& t : enumerate_trees(n)) patterns.push_back(t);
    const SimpleGraph k2 = Tree::path(2).graph();

    auto hosts = enumerate_graphs(6);
    for (const SimpleGraph& g : hosts) {
        if (count_monomorphisms(k2, g) != 2 * g.m()) ++failures;
        for (const Tree& t : patterns) {
            int64_t mon = count_monomorphisms(t.graph(), g);
            int64_t aut = automorphism_count(t.graph());
            if (mon % aut != 0) ++failures;
            // Independent copy count: distinct graph-images.
            std::set<std::vector<std::pair<int, int>>> images;
            for (const auto& m : enumerate_monomorphisms(t.graph(), g).maps) {
                std::vector<std::pair<int, int>> edge_image;
                for (auto [u, v] : t.edges())
                    edge_image.push_back({std::min(m[u], m[v]), std::max(m[u], m[v])});
                std::sort(edge_image.begin(), edge_image.end());
                images.insert(std::move(edge_image));
            }
            if (static_cast<int64_t>(images.size()) != mon / aut) ++failures;
            if (count_copies(t.graph(), g) != mon / aut) ++failures;
        }
    }

    const Tree p5 = Tree::path(5);
    for (int m = 1; m <= 4; ++m) {
        FlowerGraph fg = flower(FlowerSpec(p5.graph(), {2, 3}, m));
        int64_t copies = count_copies(p5.graph(), fg.graph);
        if (copies < int64_t{m} * m) ++failures;
        int64_t e = fg.graph.m();
        if (copies > e * e) ++failures;  // the intuition-section upper bound
        // Canonical copies: left half from copy p, right leaf from copy p'.
        int64_t canonical = 0;
        for (int p = 0; p < m; ++p)
            for (int pp = 0; pp < m; ++pp) {
                Monomorphism cand = fg.copy_maps[p];
                cand[4] = fg.copy_maps[pp][4];
                if (is_monomorphism(p5.graph(), fg.graph, cand)) ++canonical;
            }
        if (canonical != int64_t{m} * m) ++failures;
    }

    res.pass = failures == 0;
    res.detail = std::to_string(hosts.size()) + " hosts x " +
                 std::to_string(patterns.size()) + " patterns, " +
                 plural(failures, "identity failure");
    return res;
}

CheckResult check_construction_identities() {
    CheckResult res{"construction-identities", false, ""};
    int64_t checks = 0, failures = 0;

    for (int n = 2; n <= 8; ++n)
        for (const Tree& h : enumerate_trees(n)) {
            for (uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
                std::vector<int> roots;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) roots.push_back(v);
                int root_edges = h.graph().induced(roots).m();
                for (int q = 1; q <= 5; ++q) {
                    FlowerGraph fg = flower(FlowerSpec(h.graph(), roots, q));
                    ++checks;
                    int r = static_cast<int>(roots.size());
                    if (fg.graph.n() != r + q * (n - r)) ++failures;
                    if (fg.graph.m() != root_edges + q * (h.graph().m() - root_edges))
                        ++failures;
                }
            }
        }

    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                SimpleGraph th = theta(ThetaSpec(a, b, c));
                ++checks;
                if (b == 1) {
                    if (th.n() != c + 1 || th.m() != c) ++failures;
                } else {
                    if (th.n() != (c + 1) + a * c * (b - 1) || th.m() != a * c * b) ++failures;
                }
            }

    {
        FlowerGraph fig1 = flower(FlowerSpec(Tree::path(6).graph(), {1, 4}, 4));
        if (fig1.graph.n() != 18 || fig1.graph.m() != 20) ++failures;
        if (components_after_removal(Tree::path(6).graph(), {1, 4}).count < 3) ++failures;
        FlowerGraph fig2 = flower(FlowerSpec(Tree::path(5).graph(), {2, 3}, 3));
        if (fig2.graph.n() != 11 || fig2.graph.m() != 10) ++failures;
        checks += 2;
    }

    for (int d = 4; d <= 8; ++d)
        for (int k : {2, 3}) {
            if (d < 2 * k) continue;
            Tree t = Tree::path(d + 1);
            DiameterRootSet rs = diameter_root_set(t, k);
            for (int q : {2, 3}) {
                FlowerGraph fg = flower(FlowerSpec(t.graph(), rs.roots, q));
                SimpleGraph core = two_core(fg.graph).core;
                SimpleGraph expected = theta(ThetaSpec(q, rs.b, k - 1));
                ++checks;
                if (!find_isomorphism(core, expected)) ++failures;
            }
        }

    res.pass = failures == 0;
    res.detail = std::to_string(checks) + " identities, " + plural(failures, "failure");
    return res;
}

CheckResult check_leaf_diameter_inequality() {
    CheckResult res{"leaf-diameter-inequality", false, ""};
    // v <= l*d/2 + 1, tight for stars and paths. (The additive constant is
    // necessary: a path has l = 2 and d = v - 1.)
    int64_t trees = 0, violations = 0, tight = 0;
    for (int n = 3; n <= 10; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            ++trees;
            TreeMetrics m = tree_metrics(t);
            int64_t lhs = 2 * int64_t{t.n()};
            int64_t rhs = static_cast<int64_t>(m.leaves.size()) * m.diameter + 2;
            if (lhs > rhs) ++violations;
            if (lhs == rhs) ++tight;
        }
    res.pass = violations == 0;
    res.detail = plural(trees, "tree") + " on 3..10 vertices, " +
                 plural(violations, "violation") + ", bound tight on " +
                 plural(tight, "tree");
    return res;
}

CheckResult check_theta_in_flower() {
    CheckResult res{"theta-in-flower", false, ""};
    int64_t members = 0, failures = 0;
    for (int t = 7; t <= 10; ++t)
        for (int k : {2, 3}) {
            if (t < 2 * k + 1) continue;
            const int b_max = (t - 3) / (k - 1);
            for (int q : {2, 3})
                for (const FlowerSpec& spec : flower_family(Tree::path(t).graph(), k + 1, q)) {
                    ++members;
                    auto emb = find_theta_in_flower(spec, k);
                    if (!emb) {
                        ++failures;
                        continue;
                    }
                    if (emb->spec.segment_length < 2 || emb->spec.segment_length > b_max)
                        ++failures;
                    if (!validate_theta_embedding(flower(spec).graph, *emb)) ++failures;
                }
        }
    res.pass = failures == 0;
    res.detail = plural(members, "flower-family member") + ", " + plural(failures, "failure");
    return res;
}

CheckResult check_key_observation_bound() {
    CheckResult res{"key-observation-bound", false, ""};
    struct Sample {
        SimpleGraph h;
        std::vector<int> roots;
        int k;
        int n_prime;
    };
    std::vector<Sample> samples = {
        {Tree::path(5).graph(), {2, 3}, 1, 4},
        {Tree::path(5).graph(), {1, 3}, 2, 3},
        {Tree::path(6).graph(), {1, 4}, 2, 3},
        {Tree::path(4).graph(), {1, 2}, 1, 4},
        {Tree::star(3).graph(), {0}, 2, 3},
    };
    FamilySpec triangle({complete(3)});

    int64_t failures = 0;
    for (const auto& s : samples) {
        if (components_after_removal(s.h, s.roots).count != s.k + 1) ++failures;
        FlowerGraph fg = flower(FlowerSpec(s.h, s.roots, s.n_prime));
        int64_t needed = 1;
        for (int i = 0; i <= s.k; ++i) needed *= s.n_prime;
        if (count_copies(s.h, fg.graph) < needed) ++failures;
        if (!is_family_free(fg.graph, triangle).free) ++failures;
    }
    res.pass = failures == 0;
    res.detail = std::to_string(samples.size()) + " sampled (H,R), " +
                 plural(failures, "failure");
    return res;
}

CheckResult check_pierce_or_witness_soundness() {
    CheckResult res{"pierce-or-witness-soundness", false, ""};
    std::vector<Tree> patterns = {Tree::path(4), Tree::path(5), Tree::path(6), Tree::star(3),
                                  Tree::star(4)};
    int64_t instances = 0, pierced = 0, witnessed = 0, inconclusive = 0, failures = 0;

    for (const Tree& pattern : patterns) {
        const int n = pattern.n();
        for (uint32_t mask = 1; mask + 1 < (1u << n) && instances < 200; ++mask) {
            std::vector<int> roots;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) roots.push_back(v);
            for (int m : {2, 3}) {
                for (int k : {1, 2}) {
                    if (instances >= 200) break;
                    ++instances;
                    FlowerGraph fg = flower(FlowerSpec(pattern.graph(), roots, m));
                    MonomorphismFamily fam = canonical_flower_family(fg);
                    const Monomorphism& phi = fam.members.front();
                    try {
                        Certificate cert =
                            pierce_or_witness(fg.graph, pattern, k, 2, m, fam, phi);
                        SubtreeSystem sys = highly_extendable_subtrees(pattern, phi, fam, m);
                        switch (cert.kind) {
                            case Certificate::Kind::Pierced:
                                ++pierced;
                                if (static_cast<int>(cert.piercing.edges.size()) > k ||
                                    !pierces(cert.piercing, sys))
                                    ++failures;
                                break;
                            case Certificate::Kind::Witness:
                                ++witnessed;
                                if (!cert.witness ||
                                    !validate_flower_embedding(fg.graph, pattern, k,
                                                               *cert.witness))
                                    ++failures;
                                break;
                            case Certificate::Kind::Inconclusive:
                                ++inconclusive;
                                break;
                        }
                    } catch (const std::logic_error&) {
                        ++failures;
                    }
                }
            }
        }
    }

    res.pass = failures == 0;
    std::ostringstream os;
    os << instances << " instances: " << pierced << " pierced, " << witnessed << " witnessed, "
       << inconclusive << " inconclusive, " << failures << " validation failures";
    res.detail = os.str();
    return res;
}

CheckResult check_nice_tuple_layer() {
    CheckResult res{"nice-tuple-layer", false, ""};
    int64_t tuples = 0, failures = 0;

    for (int t = 7; t <= 12; ++t)
        for (int k : {3, 4}) {
            if (2 * k > t) continue;
            if ((t - 2) % (k - 1) == 0) continue;  // lemma precondition
            const int bound = (t - 3) / (k - 1) - 1;
            Tree host = Tree::path(t);

            // All matchings of k disjoint path edges.
            std::vector<std::vector<int>> matchings;
            std::vector<int> cur;
            auto gen = [&](auto&& self, int start) -> void {
                if (static_cast<int>(cur.size()) == k) {
                    matchings.push_back(cur);
                    return;
                }
                for (int e = start; e + 1 < t; ++e) {
                    cur.push_back(e);
                    self(self, e + 2);
                    cur.pop_back();
                }
            };
            gen(gen, 0);

            for (const auto& mt : matchings) {
                std::vector<int> xs;
                for (int e : mt) {
                    xs.push_back(e);
                    xs.push_back(e + 1);
                }
                std::vector<std::pair<int, int>> matching;
                for (int e : mt) matching.push_back({e, e + 1});

                // Enumerate all interval tuples compatible with the matching.
                std::vector<Subtree> trees;
                auto build = [&](auto&& self, int i) -> void {
                    if (i == 2 * k) {
                        SubtreeSystem sys(host);
                        for (const auto& s : trees) sys.add(s);
                        auto tuple = find_nice_tuple(sys, matching);
                        if (!tuple) return;
                        ++tuples;
                        try {
                            int star = small_tree_locate(*tuple, t, k);
                            if (tuple->trees[star - 1].size() > bound) ++failures;
                        } catch (const std::exception&) {
                            ++failures;
                        }
                        return;
                    }
                    if (i % 2 == 0) {  // odd 1-based: interval ends at its endpoint
                        int lo = (i == 0) ? 0 : xs[i - 1] + 1;
                        for (int l = lo; l <= xs[i]; ++l) {
                            std::vector<int> verts;
                            for (int v = l; v <= xs[i]; ++v) verts.push_back(v);
                            trees.emplace_back(host, verts);
                            self(self, i + 1);
                            trees.pop_back();
                        }
                    } else {  // even 1-based: interval starts at its endpoint
                        int hi = (i + 1 == 2 * k) ? t - 1 : xs[i + 1] - 1;
                        for (int r = xs[i]; r <= hi; ++r) {
                            std::vector<int> verts;
                            for (int v = xs[i]; v <= r; ++v) verts.push_back(v);
                            trees.emplace_back(host, verts);
                            self(self, i + 1);
                            trees.pop_back();
                        }
                    }
                };
                build(build, 0);
            }
        }

    res.pass = failures == 0 && tuples > 0;
    res.detail = plural(tuples, "realizable nice tuple") + ", " + plural(failures, "failure");
    return res;
}

CheckResult check_extremal_harness() {
    CheckResult res{"extremal-harness", false, ""};
    int64_t failures = 0;

    FamilySpec triangle({complete(3)});
    for (int n = 1; n <= 7; ++n)
        if (extremal_number(n, triangle).value != int64_t{n} * n / 4) ++failures;

    if (extremal_number(4, FamilySpec({Tree::path(3).graph()})).value != 2) ++failures;

    std::vector<FamilySpec> sampled = {
        FamilySpec({complete(3)}),
        FamilySpec({Tree::path(3).graph()}),
        FamilySpec({Tree::path(4).graph()}),
        FamilySpec({cycle(4)}),
        FamilySpec({Tree::star(3).graph()}),
        FamilySpec({cycle(5)}),
        FamilySpec({complete(4)}),
        FamilySpec({Tree::path(5).graph()}),
        FamilySpec({cycle(6)}),
        FamilySpec({complete(3), cycle(4)}),
    };
    Tree k2 = Tree::path(2);
    for (const auto& fam : sampled)
        for (int n = 2; n <= 6; ++n)
            if (generalized_extremal_number(n, k2, fam).value !=
                extremal_number(n, fam).value)
                ++failures;

    DichotomyReport rep = dichotomy_probe(Tree::path(5), triangle, 1, 4, 20);
    if (!rep.case2 || !rep.lower_bound_free || !rep.copies_bound_met) ++failures;
    bool has_certificate = false;
    for (const auto& c : rep.cases)
        if (c.structural_certificate) has_certificate = true;
    if (!has_certificate) ++failures;

    res.pass = failures == 0;
    res.detail = "Mantel n<=7, ex(4,{P3}), K2 identity on 10 families, dichotomy probe; " +
                 plural(failures, "failure");
    return res;
}

std::vector<CheckResult> run_acceptance_suite(uint64_t seed) {
    return {
        check_edge_helly_exhaustive(),
        check_edge_helly_randomized(seed),
        check_solver_oracle_equivalence(seed + 1),
        check_counting_identities(),
        check_construction_identities(),
        check_leaf_diameter_inequality(),
        check_theta_in_flower(),
        check_key_observation_bound(),
        check_pierce_or_witness_soundness(),
        check_nice_tuple_layer(),
        check_extremal_harness(),
    };
}

}  // namespace treehelly
