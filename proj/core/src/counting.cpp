#include "treehelly/counting.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "subset_iter.hpp"
#include "treehelly/constructions.hpp"
#include "treehelly/tree_ops.hpp"

namespace treehelly {

bool is_monomorphism(const SimpleGraph& pattern, const SimpleGraph& host,
                     const Monomorphism& m) {
    if (static_cast<int>(m.size()) != pattern.n()) return false;
    std::vector<char> used(host.n(), 0);
    for (int v : m) {
        if (v < 0 || v >= host.n() || used[v]) return false;
        used[v] = 1;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.adjacent(m[u], m[v])) return false;
    return true;
}

namespace {

// Shared backtracking core: visits maps in lexicographic image order.
template <typename Visit>
void mono_backtrack(const SimpleGraph& pattern, const SimpleGraph& host, Visit&& visit) {
    const int t = pattern.n(), n = host.n();
    if (t > n) return;
    std::vector<std::vector<int>> back_nbrs(t);  // neighbors with smaller label
    for (auto [u, v] : pattern.edges()) back_nbrs[v].push_back(u);

    std::vector<int> map(t, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == t) return visit(map);
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            bool ok = true;
            for (int u : back_nbrs[idx])
                if (!host.adjacent(map[u], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[idx] = w;
            used[w] = 1;
            bool stop = self(self, idx + 1);
            map[idx] = -1;
            used[w] = 0;
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
}

}  // namespace

MonomorphismList enumerate_monomorphisms(const SimpleGraph& pattern, const SimpleGraph& host,
                                         std::optional<int64_t> cap) {
    MonomorphismList out;
    mono_backtrack(pattern, host, [&](const Monomorphism& m) {
        if (cap && static_cast<int64_t>(out.maps.size()) == *cap) {
            out.truncated = true;
            return true;
        }
        out.maps.push_back(m);
        return false;
    });
    return out;
}

int64_t count_monomorphisms(const SimpleGraph& pattern, const SimpleGraph& host) {
    int64_t count = 0;
    mono_backtrack(pattern, host, [&](const Monomorphism&) {
        ++count;
        return false;
    });
    return count;
}

int64_t automorphism_count(const SimpleGraph& pattern) {
    if (pattern.n() > 10)
        throw std::invalid_argument("automorphism_count limited to 10 vertices");
    // An injective endo-homomorphism of a finite graph with equal edge budget
    // is an automorphism.
    return count_monomorphisms(pattern, pattern);
}

int64_t count_copies(const SimpleGraph& pattern, const SimpleGraph& host) {
    return count_monomorphisms(pattern, host) / automorphism_count(pattern);
}

bool is_distinguishing(const MonomorphismFamily& fam) {
    const int t = fam.pattern.n();
    std::vector<int> owner(fam.host.n(), -1);  // host vertex -> pattern class
    for (const auto& m : fam.members) {
        if (static_cast<int>(m.size()) != t) return false;
        for (int x = 0; x < t; ++x) {
            if (owner[m[x]] == -1)
                owner[m[x]] = x;
            else if (owner[m[x]] != x)
                return false;
        }
    }
    return true;
}

MonomorphismFamily extract_distinguishing(const SimpleGraph& pattern, const SimpleGraph& host,
                                          uint64_t seed) {
    const int t = pattern.n(), n = host.n();
    if (t > 12) throw std::invalid_argument("extract_distinguishing limited to 12-vertex patterns");

    MonomorphismFamily out{pattern, host, {}, {}};
    auto all = enumerate_monomorphisms(pattern, host).maps;
    const int64_t mon = static_cast<int64_t>(all.size());
    if (t == 0 || mon == 0) {
        out.members = all;
        out.partition = std::vector<int>(n, 0);
        return out;
    }

    int64_t tt = 1;
    for (int i = 0; i < t; ++i) tt *= t;

    auto filter = [&](const std::vector<int>& partition) {
        std::vector<Monomorphism> kept;
        for (const auto& m : all) {
            bool ok = true;
            for (int x = 0; x < t && ok; ++x) ok = partition[m[x]] == x;
            if (ok) kept.push_back(m);
        }
        return kept;
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> cls(0, t - 1);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<int> partition(n);
        for (int v = 0; v < n; ++v) partition[v] = cls(rng);
        auto kept = filter(partition);
        if (static_cast<int64_t>(kept.size()) * tt >= mon && !kept.empty()) {
            out.members = std::move(kept);
            out.partition = std::move(partition);
            return out;
        }
    }

    // Conditional-expectation greedy. Each live map carries weight t^a where a
    // is the number of its image vertices already classed consistently; the
    // classwise sum never drops below the running total, so the final live set
    // has size at least mon / t^t.
    std::vector<std::vector<std::pair<int, int>>> image(all.size());  // (host v, pattern x)
    for (size_t i = 0; i < all.size(); ++i) {
        for (int x = 0; x < t; ++x) image[i].push_back({all[i][x], x});
        std::sort(image[i].begin(), image[i].end());
    }
    std::vector<__int128> weight(all.size(), 1);
    std::vector<int> partition(n, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<__int128> per_class(t, 0);
        for (size_t i = 0; i < all.size(); ++i) {
            if (weight[i] == 0) continue;
            auto it = std::lower_bound(image[i].begin(), image[i].end(), std::pair<int, int>{v, -1});
            if (it != image[i].end() && it->first == v) per_class[it->second] += weight[i];
        }
        int best = 0;
        for (int c = 1; c < t; ++c)
            if (per_class[c] > per_class[best]) best = c;
        partition[v] = best;
        for (size_t i = 0; i < all.size(); ++i) {
            if (weight[i] == 0) continue;
            auto it = std::lower_bound(image[i].begin(), image[i].end(), std::pair<int, int>{v, -1});
            if (it != image[i].end() && it->first == v)
                weight[i] = (it->second == best) ? weight[i] * t : 0;
        }
    }
    out.members = filter(partition);
    out.partition = std::move(partition);
    return out;
}

MonomorphismFamily canonical_flower_family(const FlowerGraph& fg) {
    MonomorphismFamily fam{fg.spec.pattern, fg.graph, fg.copy_maps, {}};
    std::vector<int> partition(fg.graph.n());
    for (int v = 0; v < fg.graph.n(); ++v) partition[v] = fg.provenance[v].second;
    fam.partition = std::move(partition);
    return fam;
}

namespace {

std::vector<int> sorted_image(const Monomorphism& m) {
    std::vector<int> im = m;
    std::sort(im.begin(), im.end());
    return im;
}

}  // namespace

std::optional<Sunflower> sunflower_extract(const MonomorphismFamily& fam, int q) {
    if (q < 2) throw std::invalid_argument("petal count must be >= 2");
    const int t = fam.pattern.n();
    const auto& members = fam.members;
    if (static_cast<int>(members.size()) < q) return std::nullopt;

    std::vector<std::vector<int>> images;
    images.reserve(members.size());
    for (const auto& m : members) images.push_back(sorted_image(m));

    std::set<std::vector<int>> kernel_candidates;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(images[i].begin(), images[i].end(), images[j].begin(),
                                  images[j].end(), std::back_inserter(inter));
            kernel_candidates.insert(std::move(inter));
        }

    std::vector<std::vector<int>> order{{}};
    for (const auto& k : kernel_candidates)
        if (!k.empty()) order.push_back(k);

    for (const auto& kernel_image : order) {
        if (static_cast<int>(kernel_image.size()) >= t) continue;
        // Group members covering the kernel image by (preimage set, values).
        std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<size_t>> groups;
        for (size_t i = 0; i < members.size(); ++i) {
            if (!std::includes(images[i].begin(), images[i].end(), kernel_image.begin(),
                               kernel_image.end()))
                continue;
            std::vector<int> pre, vals;
            for (int x = 0; x < t; ++x)
                if (std::binary_search(kernel_image.begin(), kernel_image.end(), members[i][x])) {
                    pre.push_back(x);
                    vals.push_back(members[i][x]);
                }
            groups[{std::move(pre), std::move(vals)}].push_back(i);
        }
        for (const auto& [key, idxs] : groups) {
            std::vector<size_t> packed;
            std::set<int> taken;
            for (size_t i : idxs) {
                bool clash = false;
                for (int v : images[i])
                    if (!std::binary_search(kernel_image.begin(), kernel_image.end(), v) &&
                        taken.count(v)) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                packed.push_back(i);
                for (int v : images[i])
                    if (!std::binary_search(kernel_image.begin(), kernel_image.end(), v))
                        taken.insert(v);
                if (static_cast<int>(packed.size()) == q) break;
            }
            if (static_cast<int>(packed.size()) == q) {
                Sunflower s;
                s.kernel = key.first;
                for (size_t i : packed) s.petals.push_back(members[i]);
                return s;
            }
        }
    }
    return std::nullopt;
}

bool validate_sunflower(const MonomorphismFamily& fam, const Sunflower& s) {
    const int t = fam.pattern.n();
    if (static_cast<int>(s.petals.size()) < 2) return false;
    if (static_cast<int>(s.kernel.size()) >= t) return false;
    if (!std::is_sorted(s.kernel.begin(), s.kernel.end())) return false;
    for (int x : s.kernel)
        if (x < 0 || x >= t) return false;

    std::set<Monomorphism> pool(fam.members.begin(), fam.members.end());
    for (const auto& p : s.petals)
        if (!pool.count(p)) return false;

    std::vector<char> in_kernel(t, 0);
    for (int x : s.kernel) in_kernel[x] = 1;
    for (size_t i = 0; i < s.petals.size(); ++i)
        for (size_t j = i + 1; j < s.petals.size(); ++j) {
            if (s.petals[i] == s.petals[j]) return false;
            // Agreement must happen exactly on the kernel, pointwise.
            for (int x = 0; x < t; ++x)
                for (int y = 0; y < t; ++y)
                    if (s.petals[i][x] == s.petals[j][y] &&
                        !(x == y && in_kernel[x]))
                        return false;
        }
    return true;
}

ExtendableSet extendable_set(const Tree& pattern, const Subtree& sub,
                             const std::vector<int>& anchor_image,
                             const MonomorphismFamily& fam) {
    ExtendableSet out;
    out.subtree_vertices = sub.vertices();
    out.anchor_image = anchor_image;
    std::sort(out.anchor_image.begin(), out.anchor_image.end());

    std::vector<int> nbrs = neighborhood(pattern, sub);
    std::set<Restriction> seen;
    for (const auto& m : fam.members) {
        std::vector<int> im;
        for (int u : nbrs) im.push_back(m[u]);
        std::sort(im.begin(), im.end());
        if (im != out.anchor_image) continue;
        Restriction r;
        for (int v : out.subtree_vertices) r.push_back(m[v]);
        if (seen.insert(r).second) out.restrictions.push_back(std::move(r));
    }
    return out;
}

SubtreeSystem highly_extendable_subtrees(const Tree& pattern, const Monomorphism& phi,
                                         const MonomorphismFamily& fam, int64_t c) {
    SubtreeSystem sys(pattern);
    for (const Subtree& sub : enumerate_subtrees(pattern)) {
        std::vector<int> anchor;
        for (int u : neighborhood(pattern, sub)) anchor.push_back(phi[u]);
        auto psi = extendable_set(pattern, sub, anchor, fam);
        if (static_cast<int64_t>(psi.restrictions.size()) >= c) sys.add(sub);
    }
    return sys;
}

bool pseudo_pierces(const std::vector<int>& w, const Subtree& sub, const Monomorphism& phi,
                    const MonomorphismFamily& fam) {
    const int t = fam.pattern.n();
    std::vector<int> target;
    for (int x : w) target.push_back(phi[x]);
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());

    std::vector<std::set<int>> candidates(sub.size());
    for (const auto& m : fam.members) {
        std::vector<int> im;
        for (int x : w) im.push_back(m[x]);
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());
        if (im != target) continue;
        for (int i = 0; i < sub.size(); ++i) candidates[i].insert(m[sub.vertices()[i]]);
    }
    for (const auto& c : candidates)
        if (static_cast<int>(c.size()) <= t) return true;
    return false;
}

RefinementReport check_refinement_conditions(const Tree& pattern,
                                             const std::vector<MonomorphismFamily>& levels,
                                             const std::vector<int64_t>& constants,
                                             int64_t c_lo, int64_t c_hi, int a, int b) {
    if (levels.empty()) throw std::invalid_argument("at least one level required");
    if (constants.size() + 1 != levels.size())
        throw std::invalid_argument("expected one constant per consecutive level pair");
    for (const auto& lvl : levels) {
        if (!(lvl.pattern == pattern.graph()) || !(lvl.host == levels[0].host))
            throw std::invalid_argument("levels must share pattern and host");
    }
    const size_t depth = levels.size();

    RefinementReport rep;
    for (const auto& lvl : levels) rep.level_sizes.push_back(lvl.members.size());
    rep.level_constants = constants;

    // S1: every level distinguishing, each nested in the previous one.
    rep.s1_nested_distinguishing = true;
    for (size_t i = 0; i < depth; ++i) {
        if (!is_distinguishing(levels[i])) rep.s1_nested_distinguishing = false;
        if (i > 0) {
            std::set<Monomorphism> prev(levels[i - 1].members.begin(),
                                        levels[i - 1].members.end());
            for (const auto& m : levels[i].members)
                if (!prev.count(m)) rep.s1_nested_distinguishing = false;
        }
    }

    auto system_of = [&](size_t li, const Monomorphism& phi) {
        return highly_extendable_subtrees(pattern, phi, levels[li - 1], constants[li - 1]);
    };

    // S2: constants sandwiched by c_lo/c_hi and one common system across all
    // deeper-level maps.
    rep.s2_common_system = true;
    {
        int64_t prev = c_lo;
        for (int64_t c : constants) {
            if (c < prev) rep.s2_common_system = false;
            prev = c;
        }
        if (prev > c_hi) rep.s2_common_system = false;
    }
    bool have_common = false;
    std::vector<std::vector<int>> common;
    for (size_t li = 1; li < depth && rep.s2_common_system; ++li)
        for (const auto& phi : levels[li].members) {
            std::vector<std::vector<int>> sys;
            SubtreeSystem full = system_of(li, phi);
            for (const auto& sub : full.members()) sys.push_back(sub.vertices());
            if (!have_common) {
                common = std::move(sys);
                have_common = true;
            } else if (sys != common) {
                rep.s2_common_system = false;
                break;
            }
        }
    if (rep.s2_common_system && have_common) rep.common_system = common;

    // S3: at every minimal system member, c_lo restrictions with pairwise
    // disjoint images extend through the top-level family.
    rep.s3_disjoint_extensions = true;
    for (size_t li = 1; li < depth && rep.s3_disjoint_extensions; ++li)
        for (const auto& phi : levels[li].members) {
            auto sys = system_of(li, phi);
            for (size_t i = 0; i < sys.members().size(); ++i) {
                const auto& cand = sys.members()[i];
                bool minimal = true;
                for (size_t j = 0; j < sys.members().size() && minimal; ++j)
                    if (j != i && sys.members()[j].size() < cand.size() &&
                        std::includes(cand.vertices().begin(), cand.vertices().end(),
                                      sys.members()[j].vertices().begin(),
                                      sys.members()[j].vertices().end()))
                        minimal = false;
                if (!minimal) continue;
                std::vector<int> anchor;
                for (int u : neighborhood(pattern, cand)) anchor.push_back(phi[u]);
                auto psi = extendable_set(pattern, cand, anchor, levels[0]);
                int64_t packed = 0;
                std::set<int> taken;
                for (const auto& r : psi.restrictions) {
                    bool clash = false;
                    for (int v : r)
                        if (taken.count(v)) {
                            clash = true;
                            break;
                        }
                    if (clash) continue;
                    ++packed;
                    for (int v : r) taken.insert(v);
                    if (packed >= c_lo) break;
                }
                if (packed < c_lo) {
                    rep.s3_disjoint_extensions = false;
                    break;
                }
            }
            if (!rep.s3_disjoint_extensions) break;
        }

    // S4: no (a edges, b vertices) budget pseudo-pierces a deeper map's
    // whole system through the previous level.
    rep.s4_not_pseudo_pierced = true;
    auto pattern_edges = pattern.edges();
    for (size_t li = 1; li < depth && rep.s4_not_pseudo_pierced; ++li)
        for (const auto& phi : levels[li].members) {
            auto sys = system_of(li, phi);
            bool pierced = detail::for_each_combination(
                static_cast<int>(pattern_edges.size()), a, [&](const std::vector<int>& eidx) {
                    return detail::for_each_combination(
                        pattern.n(), b, [&](const std::vector<int>& vidx) {
                            std::vector<int> w;
                            for (int e : eidx) {
                                w.push_back(pattern_edges[e].first);
                                w.push_back(pattern_edges[e].second);
                            }
                            for (int v : vidx) w.push_back(v);
                            std::sort(w.begin(), w.end());
                            w.erase(std::unique(w.begin(), w.end()), w.end());
                            for (const auto& sub : sys.members())
                                if (!pseudo_pierces(w, sub, phi, levels[li - 1])) return false;
                            return true;
                        });
                });
            if (pierced) {
                rep.s4_not_pseudo_pierced = false;
                break;
            }
        }

    // S5: the deepest level still captures a c_hi fraction of all maps.
    rep.s5_size_bound =
        static_cast<int64_t>(levels.back().members.size()) * c_hi >=
        count_monomorphisms(pattern.graph(), levels[0].host);

    return rep;
}

}  // namespace treehelly
