#include "treehelly/piercing.hpp"

#include <algorithm>
#include <set>

#include "subset_iter.hpp"
#include "treehelly/constructions.hpp"
#include "treehelly/isomorphism.hpp"
#include "treehelly/random_gen.hpp"
#include "treehelly/tree_ops.hpp"

namespace treehelly {

namespace {

using Edge = std::pair<int, int>;

bool member_hit_by_edge(const std::vector<int>& member, const Edge& e) {
    return std::binary_search(member.begin(), member.end(), e.first) ||
           std::binary_search(member.begin(), member.end(), e.second);
}

std::vector<std::vector<int>> member_sets(const SubtreeSystem& sys) {
    std::vector<std::vector<int>> out;
    out.reserve(sys.members().size());
    for (const auto& s : sys.members()) out.push_back(s.vertices());
    return out;
}

// Exact minimum edge piercing via branch and bound (edges ordered by how many
// members they cover), then the lexicographically least optimum. nullopt iff
// the host has no edges and members exist.
std::optional<std::vector<Edge>> exact_min_edges(const SimpleGraph& host,
                                                 const std::vector<std::vector<int>>& members) {
    if (members.empty()) return std::vector<Edge>{};
    const auto edges = host.edges();
    if (edges.empty()) return std::nullopt;
    const int ne = static_cast<int>(edges.size());
    const int nm = static_cast<int>(members.size());

    std::vector<std::vector<int>> covers(nm);  // member -> covering edge indices
    std::vector<int> edge_load(ne, 0);
    for (int m = 0; m < nm; ++m)
        for (int e = 0; e < ne; ++e)
            if (member_hit_by_edge(members[m], edges[e])) {
                covers[m].push_back(e);
                ++edge_load[e];
            }

    int best = nm;  // one incident edge per member always works on a tree host
    std::vector<int> cover_count(nm, 0);
    int uncovered = nm;
    auto bnb = [&](auto&& self, int depth) -> void {
        if (uncovered == 0) {
            best = std::min(best, depth);
            return;
        }
        if (depth + 1 > best) return;
        int pick = -1;
        for (int m = 0; m < nm; ++m)
            if (cover_count[m] == 0 &&
                (pick == -1 || covers[m].size() < covers[pick].size()))
                pick = m;
        std::vector<int> options = covers[pick];
        std::sort(options.begin(), options.end(), [&](int a, int b) {
            if (edge_load[a] != edge_load[b]) return edge_load[a] > edge_load[b];
            return a < b;
        });
        for (int e : options) {
            std::vector<int> touched;
            for (int m = 0; m < nm; ++m)
                if (member_hit_by_edge(members[m], edges[e])) {
                    if (cover_count[m]++ == 0) --uncovered;
                    touched.push_back(m);
                }
            self(self, depth + 1);
            for (int m : touched)
                if (--cover_count[m] == 0) ++uncovered;
        }
    };
    bnb(bnb, 0);

    std::vector<Edge> result;
    detail::for_each_combination(ne, best, [&](const std::vector<int>& idx) {
        if (static_cast<int>(idx.size()) != best) return false;
        for (const auto& member : members) {
            bool hit = false;
            for (int e : idx)
                if (member_hit_by_edge(member, edges[e])) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        for (int e : idx) result.push_back(edges[e]);
        return true;
    });
    return result;
}

}  // namespace

bool pierces(const PiercingSet& p, const SubtreeSystem& sys) {
    const SimpleGraph& host = sys.host().graph();
    std::vector<char> hit(host.n(), 0);
    for (int v : p.vertices) {
        host.check_vertex(v);
        hit[v] = 1;
    }
    for (auto [u, v] : p.edges) {
        if (!host.adjacent(u, v))
            throw std::invalid_argument("piercing set uses a non-edge of the host");
        hit[u] = hit[v] = 1;
    }
    for (const auto& member : sys.members()) {
        bool ok = false;
        for (int v : member.vertices())
            if (hit[v]) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::vector<Edge> min_edge_piercing(const SubtreeSystem& sys) {
    auto result = exact_min_edges(sys.host().graph(), member_sets(sys));
    if (!result)
        throw std::invalid_argument("edgeless host: a non-empty system has no edge piercing");
    return *result;
}

std::vector<Edge> min_edge_piercing_recursive(const SubtreeSystem& sys) {
    const SimpleGraph& host = sys.host().graph();
    std::vector<char> alive(host.n(), 1);

    auto rec = [&](auto&& self, std::vector<std::vector<int>> members) -> std::vector<Edge> {
        if (members.empty()) return {};
        int alive_count = 0, last = -1;
        for (int v = 0; v < host.n(); ++v)
            if (alive[v]) {
                ++alive_count;
                last = v;
            }
        if (alive_count == 1)
            throw std::invalid_argument(
                "edgeless host: a non-empty system has no edge piercing");
        auto alive_degree = [&](int v) {
            int d = 0;
            for (int u : host.neighbors(v))
                if (alive[u]) ++d;
            return d;
        };
        if (alive_count == 2) {
            int other = -1;
            for (int v = 0; v < host.n(); ++v)
                if (alive[v] && v != last) other = v;
            return {{std::min(other, last), std::max(other, last)}};
        }
        int x = -1;
        for (int v = 0; v < host.n() && x == -1; ++v)
            if (alive[v] && alive_degree(v) == 1) x = v;
        int y = -1;
        for (int u : host.neighbors(x))
            if (alive[u]) y = u;

        bool singleton_x = false;
        for (const auto& m : members)
            if (m.size() == 1 && m[0] == x) singleton_x = true;

        if (singleton_x) {
            // The pendant edge xy is forced; members touching x or y are done.
            std::vector<std::vector<int>> rest;
            for (const auto& m : members)
                if (!std::binary_search(m.begin(), m.end(), x) &&
                    !std::binary_search(m.begin(), m.end(), y))
                    rest.push_back(m);
            auto sub = self(self, std::move(rest));
            sub.push_back({std::min(x, y), std::max(x, y)});
            return sub;
        }
        // No member is {x}: deleting the leaf changes no piercing optimum.
        alive[x] = 0;
        for (auto& m : members) m.erase(std::remove(m.begin(), m.end(), x), m.end());
        return self(self, std::move(members));
    };
    auto result = rec(rec, member_sets(sys));
    std::sort(result.begin(), result.end());
    return result;
}

HellyReport edge_helly_check(const SubtreeSystem& sys, int k) {
    if (k < 0) throw std::invalid_argument("budget k must be >= 0");
    HellyReport rep;
    rep.k = k;
    const auto members = member_sets(sys);
    const int nm = static_cast<int>(members.size());

    rep.local_ok = true;
    detail::for_each_combination(nm, k + 1, [&](const std::vector<int>& idx) {
        if (idx.empty()) return false;
        std::vector<std::vector<int>> sub;
        for (int i : idx) sub.push_back(members[i]);
        auto solved = exact_min_edges(sys.host().graph(), sub);
        if (solved && static_cast<int>(solved->size()) <= k) return false;
        rep.local_ok = false;
        rep.violating = idx;
        return true;
    });

    auto full = exact_min_edges(sys.host().graph(), members);
    if (full) rep.min_size = static_cast<int>(full->size());
    rep.global_ok = full && static_cast<int>(full->size()) <= k;
    rep.verdict = !(rep.local_ok && !rep.global_ok);
    return rep;
}

NeighborConditionResult neighbor_condition_check(const SubtreeSystem& sys, int k) {
    if (sys.host().n() <= 1) throw std::invalid_argument("host must have an edge");
    if (k < 0) throw std::invalid_argument("budget k must be >= 0");
    const auto members = member_sets(sys);
    const int nm = static_cast<int>(members.size());

    std::vector<std::vector<char>> interact(nm, std::vector<char>(nm, 0));
    for (int i = 0; i < nm; ++i)
        for (int j = i + 1; j < nm; ++j) {
            bool meet = false;
            for (int u : members[i]) {
                if (std::binary_search(members[j].begin(), members[j].end(), u)) meet = true;
                for (int v : members[j])
                    if (sys.host().adjacent(u, v)) meet = true;
            }
            interact[i][j] = interact[j][i] = meet;
        }

    NeighborConditionResult res;
    res.ok = true;
    detail::for_each_combination(nm, k + 1, [&](const std::vector<int>& idx) {
        if (static_cast<int>(idx.size()) != k + 1) return false;
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b)
                if (interact[idx[a]][idx[b]]) return false;
        res.ok = false;
        res.violating = idx;
        return true;
    });
    return res;
}

std::optional<PiercingSet> mixed_piercing_search(const SubtreeSystem& sys, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("budgets must be >= 0");
    const SimpleGraph& host = sys.host().graph();
    const auto edges = host.edges();
    const int ne = static_cast<int>(edges.size());

    std::optional<PiercingSet> found;
    for (int ea = 0; ea <= a && !found; ++ea)
        for (int vb = 0; vb <= b && !found; ++vb)
            detail::for_each_combination(ne, ea, [&](const std::vector<int>& eidx) {
                if (static_cast<int>(eidx.size()) != ea) return false;
                return detail::for_each_combination(
                    host.n(), vb, [&](const std::vector<int>& vidx) {
                        if (static_cast<int>(vidx.size()) != vb) return false;
                        PiercingSet p;
                        for (int e : eidx) p.edges.push_back(edges[e]);
                        p.vertices = vidx;
                        if (!pierces(p, sys)) return false;
                        found = std::move(p);
                        return true;
                    });
            });
    return found;
}

MixedProbeResult mixed_helly_probe(int max_n, int max_members, int a, int b, int h, int trials,
                                   uint64_t seed) {
    if (h < 1) throw std::invalid_argument("locality h must be >= 1");
    if (max_n < 2) throw std::invalid_argument("max_n must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(2, max_n);

    MixedProbeResult res;
    for (int trial = 0; trial < trials; ++trial) {
        ++res.trials_run;
        Tree host = random_tree(order(rng), rng);
        SubtreeSystem sys = random_system(host, max_members, rng);
        if (mixed_piercing_search(sys, a, b)) continue;  // globally pierceable

        const auto& members = sys.members();
        bool local_ok = true;
        detail::for_each_combination(
            static_cast<int>(members.size()), h, [&](const std::vector<int>& idx) {
                if (idx.empty()) return false;
                SubtreeSystem sub(sys.host());
                for (int i : idx) sub.add(members[i]);
                if (mixed_piercing_search(sub, a, b)) return false;
                local_ok = false;
                return true;
            });
        if (local_ok) {
            res.counterexample = sys;
            return res;
        }
    }
    return res;
}

bool validate_flower_embedding(const SimpleGraph& g, const Tree& pattern, int k,
                               const FlowerEmbedding& emb) {
    const int t = pattern.n();
    const int q = static_cast<int>(emb.maps.size());
    if (q < 2) return false;
    if (!std::is_sorted(emb.roots.begin(), emb.roots.end())) return false;
    if (static_cast<int>(emb.roots.size()) >= t) return false;
    for (int r : emb.roots)
        if (r < 0 || r >= t) return false;

    for (const auto& m : emb.maps)
        if (!is_monomorphism(pattern.graph(), g, m)) return false;

    std::vector<char> in_root(t, 0);
    for (int r : emb.roots) in_root[r] = 1;
    for (int p = 0; p < q; ++p)
        for (int pp = p + 1; pp < q; ++pp)
            for (int x = 0; x < t; ++x)
                for (int y = 0; y < t; ++y) {
                    bool equal = emb.maps[p][x] == emb.maps[pp][y];
                    bool expected = x == y && in_root[x];
                    if (equal != expected) return false;
                }

    if (components_after_removal(pattern.graph(), emb.roots).count < k + 1) return false;

    // Union of graph-images vs. the abstract flower.
    std::vector<int> image_verts;
    for (const auto& m : emb.maps)
        for (int v : m) image_verts.push_back(v);
    std::sort(image_verts.begin(), image_verts.end());
    image_verts.erase(std::unique(image_verts.begin(), image_verts.end()), image_verts.end());
    std::vector<int> compact(g.n(), -1);
    for (size_t i = 0; i < image_verts.size(); ++i) compact[image_verts[i]] = static_cast<int>(i);
    SimpleGraph image(static_cast<int>(image_verts.size()));
    for (const auto& m : emb.maps)
        for (auto [u, v] : pattern.edges()) image.add_edge(compact[m[u]], compact[m[v]]);
    SimpleGraph expected = flower(FlowerSpec(pattern.graph(), emb.roots, q)).graph;
    return find_isomorphism(image, expected).has_value();
}

Certificate pierce_or_witness(const SimpleGraph& g, const Tree& pattern, int k, int q, int64_t c,
                              const MonomorphismFamily& fam, const Monomorphism& phi) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (pattern.n() < 2) throw std::invalid_argument("pattern must have an edge");
    if (!(fam.pattern == pattern.graph()) || !(fam.host == g))
        throw std::invalid_argument("family must live on the given pattern and host");
    if (!is_distinguishing(fam)) throw std::invalid_argument("family must be distinguishing");
    if (std::find(fam.members.begin(), fam.members.end(), phi) == fam.members.end())
        throw std::invalid_argument("phi must belong to the family");

    SubtreeSystem sys = highly_extendable_subtrees(pattern, phi, fam, c);

    auto solved = exact_min_edges(pattern.graph(), member_sets(sys));
    if (solved && static_cast<int>(solved->size()) <= k) {
        Certificate cert;
        cert.kind = Certificate::Kind::Pierced;
        cert.piercing.edges = *solved;
        if (!pierces(cert.piercing, sys))
            throw std::logic_error("piercing certificate failed re-validation");
        return cert;
    }

    auto ncc = neighbor_condition_check(sys, k);
    if (ncc.ok)
        throw std::logic_error(
            "neighbor condition holds yet no k-edge piercing exists: Helly lemma violated");

    auto fail = [](std::string why) {
        Certificate cert;
        cert.kind = Certificate::Kind::Inconclusive;
        cert.note = std::move(why);
        return cert;
    };

    // Sunflower per violating subtree, then amalgamation.
    std::vector<Monomorphism> amalgam(q, phi);
    std::set<int> root_set;
    std::vector<char> in_chosen(pattern.n(), 0);
    for (int idx : *ncc.violating) {
        const Subtree& sub = sys.members()[idx];
        for (int v : sub.vertices()) in_chosen[v] = 1;

        std::vector<int> anchor;
        for (int u : neighborhood(pattern, sub)) anchor.push_back(phi[u]);
        auto psi = extendable_set(pattern, sub, anchor, fam);

        MonomorphismFamily local{pattern.graph().induced(sub.vertices()), g, psi.restrictions,
                                 std::nullopt};
        auto sf = sunflower_extract(local, q);
        if (!sf)
            return fail("sunflower extraction found no " + std::to_string(q) +
                        " petals for a violating subtree at scale " + std::to_string(c));
        for (int pos : sf->kernel) root_set.insert(sub.vertices()[pos]);
        for (int p = 0; p < q; ++p)
            for (int i = 0; i < sub.size(); ++i)
                amalgam[p][sub.vertices()[i]] = sf->petals[p][i];
    }
    for (int v = 0; v < pattern.n(); ++v)
        if (!in_chosen[v]) root_set.insert(v);  // V_0 joins the root set

    FlowerEmbedding emb;
    emb.roots.assign(root_set.begin(), root_set.end());
    emb.maps = std::move(amalgam);
    if (!validate_flower_embedding(g, pattern, k, emb))
        return fail("amalgamated flower embedding failed re-validation");

    Certificate cert;
    cert.kind = Certificate::Kind::Witness;
    cert.witness = std::move(emb);
    return cert;
}

namespace {

void require_canonical_path(const Tree& host) {
    for (int i = 0; i + 1 < host.n(); ++i)
        if (!host.adjacent(i, i + 1))
            throw std::invalid_argument("host must be the canonically labeled path");
}

}  // namespace

std::optional<NiceTuple> find_nice_tuple(const SubtreeSystem& sys,
                                         const std::vector<std::pair<int, int>>& matching) {
    const Tree& host = sys.host();
    require_canonical_path(host);
    if (matching.empty()) throw std::invalid_argument("matching must be non-empty");
    std::vector<int> xs;
    for (auto [u, v] : matching) {
        if (v != u + 1 || u < 0 || v >= host.n())
            throw std::invalid_argument("matching must consist of path edges (v, v+1)");
        xs.push_back(u);
        xs.push_back(v);
    }
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw std::invalid_argument("matching edges must be sorted");
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i] == xs[i + 1]) throw std::invalid_argument("matching edges must be disjoint");

    const int two_k = static_cast<int>(xs.size());
    const auto& members = sys.members();

    auto minimal = [&](size_t i) {
        for (size_t j = 0; j < members.size(); ++j)
            if (j != i && members[j].size() < members[i].size() &&
                std::includes(members[i].vertices().begin(), members[i].vertices().end(),
                              members[j].vertices().begin(), members[j].vertices().end()))
                return false;
        return true;
    };

    NiceTuple tuple;
    tuple.matching = matching;
    tuple.endpoints = xs;
    for (int i = 0; i < two_k; ++i) {
        int pick = -1;
        for (size_t m = 0; m < members.size() && pick == -1; ++m) {
            if (!members[m].contains(xs[i])) continue;
            bool clean = true;
            for (int j = 0; j < two_k; ++j)
                if (j != i && members[m].contains(xs[j])) clean = false;
            if (clean && minimal(m)) pick = static_cast<int>(m);
        }
        if (pick == -1) return std::nullopt;
        tuple.trees.push_back(members[pick]);
    }

    // Structural consequences of the defining conditions; a failure here
    // would mean the selection above is wrong.
    std::vector<int> l(two_k), r(two_k);
    for (int i = 0; i < two_k; ++i) {
        l[i] = tuple.trees[i].vertices().front();
        r[i] = tuple.trees[i].vertices().back();
    }
    auto check = [&]() {
        for (int i = 0; i + 1 < two_k; ++i)
            if (l[i] >= l[i + 1] || r[i] >= r[i + 1]) return false;  // O1
        for (int i = 0; i < two_k; ++i)
            for (int j = i + 1; j < two_k; ++j) {
                if (!(xs[i] < l[j] && r[i] < xs[j])) return false;  // O2
                if (j > i + 1 && !(r[i] < l[j] - 1)) return false;  // O4
                bool meet = l[j] <= r[i];
                bool allowed = j == i + 1 && i % 2 == 1;  // O5 (i even, 1-based)
                if (meet && !allowed) return false;
            }
        for (int i = 0; i < two_k; ++i) {
            if (i % 2 == 0 && r[i] != xs[i]) return false;  // O3, odd 1-based index
            if (i % 2 == 1 && l[i] != xs[i]) return false;
            if (i % 2 == 0 && r[i] + 1 != l[i + 1]) return false;
        }
        return true;
    };
    if (!check()) throw std::logic_error("nice tuple violates its structural properties");
    return tuple;
}

int small_tree_locate(const NiceTuple& tuple, int t, int k) {
    if (k < 3) throw std::invalid_argument("requires k >= 3");
    if ((t - 2) % (k - 1) == 0)
        throw std::invalid_argument("requires t not congruent to 2 mod (k-1)");
    if (static_cast<int>(tuple.trees.size()) != 2 * k)
        throw std::invalid_argument("tuple size does not match k");
    const int bound = (t - 3) / (k - 1) - 1;
    for (int i = 2; i <= 2 * k - 2; i += 2) {  // even 1-based positions
        if (tuple.trees[i - 1].size() <= bound) return i;
    }
    for (int i = 3; i < 2 * k; i += 2) {  // odd interior positions as fallback
        if (tuple.trees[i - 1].size() <= bound) return i;
    }
    throw std::logic_error("no small tree found despite the pigeonhole guarantee");
}

}  // namespace treehelly
