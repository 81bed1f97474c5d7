#include "treehelly/tree_ops.hpp"

#include <algorithm>
#include <queue>

namespace treehelly {

TwoCoreResult two_core(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (!alive[v] || deg[v] > 1) continue;
        alive[v] = 0;
        for (int u : g.neighbors(v))
            if (alive[u] && --deg[u] <= 1) q.push(u);
    }

    TwoCoreResult res;
    res.relabel.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            res.relabel[v] = static_cast<int>(res.survivors.size());
            res.survivors.push_back(v);
        }
    res.core = SimpleGraph(static_cast<int>(res.survivors.size()));
    for (auto [u, v] : g.edges())
        if (alive[u] && alive[v]) res.core.add_edge(res.relabel[u], res.relabel[v]);
    return res;
}

namespace {

// Distances and parents from src; neighbors visited in ascending order, so the
// parent chain is the unique tree path.
void bfs(const SimpleGraph& g, int src, std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(g.n(), -1);
    parent.assign(g.n(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                parent[u] = v;
                q.push(u);
            }
    }
}

}  // namespace

TreeMetrics tree_metrics(const Tree& t) {
    const SimpleGraph& g = t.graph();
    TreeMetrics out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 1) out.leaves.push_back(v);

    int best_u = 0, best_v = 0, best_d = 0;
    std::vector<int> dist, parent;
    for (int u = 0; u < g.n(); ++u) {
        bfs(g, u, dist, parent);
        for (int v = u + 1; v < g.n(); ++v) {
            if (dist[v] > best_d) {
                best_d = dist[v];
                best_u = u;
                best_v = v;
            }
        }
    }
    out.diameter = best_d;
    bfs(g, best_u, dist, parent);
    std::vector<int> path;
    for (int v = best_v; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    out.longest_path = std::move(path);
    return out;
}

RemovalComponents components_after_removal(const SimpleGraph& h, const std::vector<int>& r) {
    for (int v : r) h.check_vertex(v);
    std::vector<char> removed(h.n(), 0);
    for (int v : r) removed[v] = 1;

    RemovalComponents out;
    std::vector<char> seen(h.n(), 0);
    for (int s = 0; s < h.n(); ++s) {
        if (removed[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : h.neighbors(v))
                if (!removed[u] && !seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    out.count = static_cast<int>(out.components.size());
    return out;
}

std::vector<int> neighborhood(const Tree& t, const Subtree& sub) {
    std::vector<int> out;
    for (int v = 0; v < t.n(); ++v) {
        if (sub.contains(v)) continue;
        for (int u : t.neighbors(v))
            if (sub.contains(u)) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

std::vector<Subtree> enumerate_subtrees(const Tree& t, std::optional<int> max_size) {
    const int n = t.n();
    if (n > 31) throw std::invalid_argument("subtree enumeration limited to 31 vertices");
    std::vector<Subtree> out;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (max_size && size > *max_size) continue;
        // connectivity of the masked subset
        int start = __builtin_ctz(mask);
        uint32_t seen = 1u << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : t.neighbors(v)) {
                uint32_t bit = 1u << u;
                if ((mask & bit) && !(seen & bit)) {
                    seen |= bit;
                    stack.push_back(u);
                }
            }
        }
        if (seen != mask) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        out.emplace_back(t, std::move(vs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace treehelly
