#include "treehelly/constructions.hpp"

#include <algorithm>

#include "treehelly/tree_ops.hpp"

namespace treehelly {

FlowerSpec::FlowerSpec(SimpleGraph pattern_, std::vector<int> roots_, int multiplicity_)
    : pattern(std::move(pattern_)), roots(std::move(roots_)), multiplicity(multiplicity_) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (int v : roots) pattern.check_vertex(v);
    if (static_cast<int>(roots.size()) >= pattern.n())
        throw std::invalid_argument("root set must be a proper subset of the pattern vertices");
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
}

FlowerGraph flower(const FlowerSpec& spec) {
    const int t = spec.pattern.n();
    const int r = static_cast<int>(spec.roots.size());
    const int q = spec.multiplicity;
    const int free_per_copy = t - r;

    std::vector<int> root_label(t, -1);
    for (int i = 0; i < r; ++i) root_label[spec.roots[i]] = i;

    FlowerGraph out{SimpleGraph(r + q * free_per_copy), spec, {}, {}};
    out.provenance.resize(r + q * free_per_copy);
    for (int i = 0; i < r; ++i) out.provenance[i] = {-1, spec.roots[i]};

    for (int p = 0; p < q; ++p) {
        std::vector<int> map(t);
        int next = r + p * free_per_copy;
        for (int v = 0; v < t; ++v) {
            if (root_label[v] != -1) {
                map[v] = root_label[v];
            } else {
                map[v] = next;
                out.provenance[next] = {p, v};
                ++next;
            }
        }
        for (auto [u, v] : spec.pattern.edges()) out.graph.add_edge(map[u], map[v]);
        out.copy_maps.push_back(std::move(map));
    }
    return out;
}

std::vector<FlowerSpec> flower_family(const SimpleGraph& h, int k, int q) {
    if (k < 1) throw std::invalid_argument("component threshold must be >= 1");
    if (q < 1) throw std::invalid_argument("multiplicity must be >= 1");
    const int n = h.n();
    if (n > 20) throw std::invalid_argument("flower_family limited to 20-vertex patterns");

    std::vector<std::vector<int>> kept;
    for (uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {  // excludes full set
        std::vector<int> r;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) r.push_back(v);
        if (components_after_removal(h, r).count >= k) kept.push_back(std::move(r));
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<FlowerSpec> out;
    out.reserve(kept.size());
    for (auto& r : kept) out.emplace_back(h, std::move(r), q);
    return out;
}

ThetaSpec::ThetaSpec(int a, int b, int c) : strands(a), segment_length(b), segments(c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("theta parameters must all be >= 1");
}

SimpleGraph theta(const ThetaSpec& spec) {
    const int b = spec.segment_length, c = spec.segments;
    if (b == 1) {
        // all strands coincide with the junction path
        SimpleGraph g(c + 1);
        for (int i = 0; i < c; ++i) g.add_edge(i, i + 1);
        return g;
    }
    std::vector<int> roots;
    for (int i = 0; i <= c; ++i) roots.push_back(i * b);
    return flower(FlowerSpec(Tree::path(1 + c * b).graph(), roots, spec.strands)).graph;
}

bool validate_theta_embedding(const SimpleGraph& host, const ThetaEmbedding& emb) {
    SimpleGraph pattern = theta(emb.spec);
    if (static_cast<int>(emb.vertex_map.size()) != pattern.n()) return false;
    std::vector<char> used(host.n(), 0);
    for (int v : emb.vertex_map) {
        if (v < 0 || v >= host.n() || used[v]) return false;
        used[v] = 1;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.adjacent(emb.vertex_map[u], emb.vertex_map[v])) return false;
    return true;
}

Tree duplicate_leaves(const Tree& t, int m) {
    if (m < 1) throw std::invalid_argument("duplication count must be >= 1");
    if (t.n() <= 2)
        throw std::invalid_argument(
            "leaf duplication requires at least 3 vertices (K1/K2 would not stay a tree)");

    std::vector<int> leaves, internal;
    for (int v = 0; v < t.n(); ++v)
        (t.degree(v) == 1 ? leaves : internal).push_back(v);

    std::vector<int> relabel(t.n(), -1);
    for (size_t i = 0; i < internal.size(); ++i) relabel[internal[i]] = static_cast<int>(i);

    SimpleGraph g(static_cast<int>(internal.size() + leaves.size() * m));
    for (auto [u, v] : t.edges())
        if (relabel[u] != -1 && relabel[v] != -1) g.add_edge(relabel[u], relabel[v]);
    int next = static_cast<int>(internal.size());
    for (int leaf : leaves) {
        int anchor = relabel[t.neighbors(leaf)[0]];
        for (int i = 0; i < m; ++i) g.add_edge(anchor, next++);
    }
    return Tree(std::move(g));
}

DiameterRootSet diameter_root_set(const Tree& t, int k) {
    if (k < 2) throw std::invalid_argument("root-set construction requires k >= 2");
    TreeMetrics metrics = tree_metrics(t);
    if (metrics.diameter < 2 * k)
        throw std::invalid_argument("root-set construction requires diameter >= 2k");

    DiameterRootSet out;
    out.b = (metrics.diameter - 2) / (k - 1);
    out.longest_path = metrics.longest_path;
    for (int i = 0; i < k; ++i) out.roots.push_back(out.longest_path[1 + i * out.b]);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

std::optional<ThetaEmbedding> find_theta_in_flower(const FlowerSpec& spec, int k) {
    const int t = spec.pattern.n();
    if (k < 2) throw std::invalid_argument("requires k >= 2");
    if (t < 2 * k + 1) throw std::invalid_argument("requires a path on at least 2k+1 vertices");
    for (int i = 0; i + 1 < t; ++i)
        if (!spec.pattern.adjacent(i, i + 1))
            throw std::invalid_argument("pattern must be the canonically labeled path");
    if (spec.pattern.m() != t - 1)
        throw std::invalid_argument("pattern must be the canonically labeled path");

    const int b = (t - 3) / (k - 1);
    auto comps = components_after_removal(spec.pattern, spec.roots);
    for (const auto& comp : comps.components) {
        int lo = comp.front(), hi = comp.back();
        if (lo == 0 || hi == t - 1) continue;
        int b_prime = static_cast<int>(comp.size()) + 1;
        if (b_prime < 2 || b_prime > b) continue;
        // flanks lo-1 and hi+1 are roots since comp is a component of P_t - R
        FlowerGraph host = flower(spec);
        ThetaSpec theta_spec(spec.multiplicity, b_prime, 1);
        std::vector<int> map;
        map.push_back(host.copy_maps[0][lo - 1]);  // junction 0
        map.push_back(host.copy_maps[0][hi + 1]);  // junction 1
        for (int p = 0; p < spec.multiplicity; ++p)
            for (int j = lo; j <= hi; ++j) map.push_back(host.copy_maps[p][j]);
        ThetaEmbedding emb(theta_spec, std::move(map));
        if (!validate_theta_embedding(host.graph, emb)) return std::nullopt;
        return emb;
    }
    return std::nullopt;
}

}  // namespace treehelly
