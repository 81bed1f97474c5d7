#include "treehelly/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treehelly {

namespace {

std::vector<int> degree_signature(const SimpleGraph& g, int v) {
    std::vector<int> sig;
    for (int u : g.neighbors(v)) sig.push_back(g.degree(u));
    std::sort(sig.begin(), sig.end());
    return sig;
}

bool extend(const SimpleGraph& g, const SimpleGraph& h, const std::vector<int>& order,
            size_t idx, std::vector<int>& map, std::vector<char>& used,
            const std::vector<std::vector<int>>& candidates) {
    if (idx == order.size()) return true;
    int v = order[idx];
    for (int w : candidates[v]) {
        if (used[w]) continue;
        bool ok = true;
        for (int u : g.neighbors(v)) {
            if (map[u] != -1 && !h.adjacent(map[u], w)) {
                ok = false;
                break;
            }
        }
        // non-edges must map to non-edges as well
        if (ok) {
            for (size_t j = 0; j < idx && ok; ++j) {
                int u = order[j];
                if (!g.adjacent(u, v) && h.adjacent(map[u], w)) ok = false;
            }
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend(g, h, order, idx + 1, map, used, candidates)) return true;
        map[v] = -1;
        used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
    const int n = g.n();
    if (n == 0) return std::vector<int>{};

    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    {
        auto a = dg, b = dh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    std::vector<std::vector<int>> candidates(n);
    for (int v = 0; v < n; ++v) {
        auto sig = degree_signature(g, v);
        for (int w = 0; w < n; ++w)
            if (dg[v] == dh[w] && sig == degree_signature(h, w)) candidates[v].push_back(w);
        if (candidates[v].empty()) return std::nullopt;
    }

    // Map high-degree, low-candidate vertices first.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (candidates[a].size() != candidates[b].size())
            return candidates[a].size() < candidates[b].size();
        if (dg[a] != dg[b]) return dg[a] > dg[b];
        return a < b;
    });

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    if (extend(g, h, order, 0, map, used, candidates)) return map;
    return std::nullopt;
}

std::string canonical_key(const SimpleGraph& g) {
    const int n = g.n();
    if (n > 8) throw std::invalid_argument("canonical_key limited to 8 vertices");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    std::string cur(static_cast<size_t>(n * (n - 1) / 2), '0');
    do {
        size_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                cur[k++] = g.adjacent(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

namespace {

std::string ahu_encode(const SimpleGraph& g, int v, int parent) {
    std::vector<std::string> child;
    for (int u : g.neighbors(v))
        if (u != parent) child.push_back(ahu_encode(g, u, v));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (auto& c : child) out += c;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const SimpleGraph& g) {
    const int n = g.n();
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) frontier.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            removed[v] = 1;
            --remaining;
            for (int u : g.neighbors(v))
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
        }
        frontier = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

}  // namespace

std::string tree_canonical_key(const Tree& t) {
    std::string best;
    for (int c : tree_centers(t.graph())) {
        std::string key = ahu_encode(t.graph(), c, -1);
        if (best.empty() || key < best) best = key;
    }
    return best;
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("tree order must be positive");
    if (n == 1) return {Tree(SimpleGraph(1))};

    std::vector<Tree> prev = enumerate_trees(n - 1);
    std::map<std::string, Tree> dedup;
    for (const Tree& t : prev) {
        for (int v = 0; v < t.n(); ++v) {
            SimpleGraph g(n);
            for (auto [a, b] : t.edges()) g.add_edge(a, b);
            g.add_edge(v, n - 1);
            Tree grown(std::move(g));
            dedup.emplace(tree_canonical_key(grown), grown);
        }
    }
    std::vector<Tree> out;
    out.reserve(dedup.size());
    for (auto& [key, t] : dedup) out.push_back(std::move(t));
    return out;
}

}  // namespace treehelly
