#include "treehelly/extremal.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "treehelly/codec.hpp"
#include "treehelly/isomorphism.hpp"

namespace treehelly {

FamilySpec::FamilySpec(std::vector<SimpleGraph> graphs, std::vector<FlowerSpec> flowers) {
    expanded_ = std::move(graphs);
    for (const auto& spec : flowers) expanded_.push_back(flower(spec).graph);
    if (expanded_.empty()) throw std::invalid_argument("family must be non-empty");
    for (const auto& g : expanded_)
        if (g.m() == 0)
            throw std::invalid_argument("every family member must contain an edge");
}

std::vector<SimpleGraph> enumerate_graphs(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (n > 8)
        throw std::invalid_argument("native enumeration limited to 8 vertices; supply a corpus");

    std::map<std::string, SimpleGraph> current;
    current.emplace(canonical_key(SimpleGraph(1)), SimpleGraph(1));
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, SimpleGraph> next;
        for (const auto& [key, g] : current) {
            const int base = g.n();
            for (uint32_t mask = 0; mask < (1u << base); ++mask) {
                SimpleGraph grown(base + 1);
                for (auto [u, v] : g.edges()) grown.add_edge(u, v);
                for (int v = 0; v < base; ++v)
                    if (mask & (1u << v)) grown.add_edge(v, base);
                next.emplace(canonical_key(grown), std::move(grown));
            }
        }
        current = std::move(next);
    }
    std::vector<SimpleGraph> out;
    out.reserve(current.size());
    for (auto& [key, g] : current) out.push_back(std::move(g));
    return out;
}

std::vector<SimpleGraph> enumerate_graphs(int n, std::istream& graph6_stream) {
    std::vector<SimpleGraph> out;
    std::string line;
    while (std::getline(graph6_stream, line)) {
        if (line.empty()) continue;
        SimpleGraph g = decode_graph6(line);
        if (g.n() != n)
            throw std::invalid_argument("corpus graph order mismatch: expected " +
                                        std::to_string(n) + ", got " + std::to_string(g.n()));
        out.push_back(std::move(g));
    }
    return out;
}

FreenessResult is_family_free(const SimpleGraph& g, const FamilySpec& f) {
    FreenessResult res;
    for (size_t i = 0; i < f.members().size(); ++i) {
        auto found = enumerate_monomorphisms(f.members()[i], g, 1);
        if (!found.maps.empty()) {
            res.free = false;
            res.member_index = i;
            res.witness = found.maps.front();
            return res;
        }
    }
    return res;
}

namespace {

ExtremalRecord best_over_free(int n, const FamilySpec& f,
                              const std::function<int64_t(const SimpleGraph&)>& objective) {
    ExtremalRecord rec;
    rec.n = n;
    rec.value = -1;
    for (const SimpleGraph& g : enumerate_graphs(n)) {
        if (!is_family_free(g, f).free) continue;
        int64_t val = objective(g);
        if (val > rec.value) {
            rec.value = val;
            rec.extremal_graphs.clear();
        }
        if (val == rec.value) rec.extremal_graphs.push_back(encode_graph6(g));
    }
    if (rec.value < 0) {
        rec.value = 0;  // no free graph exists only for degenerate families
        rec.extremal_graphs.clear();
    }
    std::sort(rec.extremal_graphs.begin(), rec.extremal_graphs.end());
    return rec;
}

}  // namespace

ExtremalRecord extremal_number(int n, const FamilySpec& f) {
    return best_over_free(n, f, [](const SimpleGraph& g) { return int64_t{g.m()}; });
}

ExtremalRecord generalized_extremal_number(int n, const Tree& t, const FamilySpec& f) {
    return best_over_free(
        n, f, [&](const SimpleGraph& g) { return count_copies(t.graph(), g); });
}

DichotomyReport dichotomy_probe(const Tree& t, const FamilySpec& f, int k, int q_max, int n) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (q_max < 1) throw std::invalid_argument("q_max must be >= 1");
    if (n < t.n()) throw std::invalid_argument("n must be at least v(T)");

    DichotomyReport rep;
    rep.q_max = q_max;

    bool family_all_nonbipartite = true;
    for (const auto& member : f.members())
        if (member.bipartite()) family_all_nonbipartite = false;

    for (const FlowerSpec& spec : flower_family(t.graph(), k + 1, 1)) {
        DichotomyCase c;
        c.roots = spec.roots;
        for (int q = 1; q <= q_max && !c.q_found; ++q) {
            SimpleGraph host = flower(FlowerSpec(t.graph(), spec.roots, q)).graph;
            for (size_t i = 0; i < f.members().size(); ++i)
                if (!enumerate_monomorphisms(f.members()[i], host, 1).maps.empty()) {
                    c.q_found = q;
                    c.member_index = i;
                    break;
                }
        }
        if (!c.q_found) {
            rep.case2 = true;
            // Flowers of a bipartite pattern are bipartite (copies glued on a
            // consistent two-coloring), so a family with no bipartite member
            // never embeds, for any q.
            if (family_all_nonbipartite && t.graph().bipartite())
                c.structural_certificate = "bipartite flower vs. non-bipartite family";
            if (!rep.case2_roots) rep.case2_roots = spec.roots;
        }
        rep.cases.push_back(std::move(c));
    }

    if (rep.case2_roots) {
        rep.n_prime = n / t.n();
        if (rep.n_prime >= 1) {
            FlowerGraph fg = flower(FlowerSpec(t.graph(), *rep.case2_roots, rep.n_prime));
            rep.lower_bound_graph = encode_graph6(fg.graph);
            rep.lower_bound_free = is_family_free(fg.graph, f).free;
            rep.lower_bound_copies = count_copies(t.graph(), fg.graph);
            int64_t needed = 1;
            for (int i = 0; i < k + 1; ++i) needed *= rep.n_prime;
            rep.copies_bound_met = rep.lower_bound_copies >= needed;
        }
    }
    return rep;
}

}  // namespace treehelly
