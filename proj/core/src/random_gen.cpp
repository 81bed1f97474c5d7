#include "treehelly/random_gen.hpp"

#include <algorithm>

namespace treehelly {

Tree random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("tree order must be positive");
    SimpleGraph g(n);
    if (n >= 2) {
        if (n == 2) {
            g.add_edge(0, 1);
        } else {
            std::uniform_int_distribution<int> vtx(0, n - 1);
            std::vector<int> pruefer(n - 2);
            for (int& p : pruefer) p = vtx(rng);
            std::vector<int> deg(n, 1);
            for (int p : pruefer) ++deg[p];
            for (int p : pruefer) {
                for (int v = 0; v < n; ++v)
                    if (deg[v] == 1) {
                        g.add_edge(v, p);
                        --deg[v];
                        --deg[p];
                        break;
                    }
            }
            int u = -1;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1) {
                    if (u == -1)
                        u = v;
                    else
                        g.add_edge(u, v);
                }
        }
    }
    return Tree(std::move(g));
}

Subtree random_subtree(const Tree& host, std::mt19937_64& rng) {
    const int n = host.n();
    std::uniform_int_distribution<int> size_dist(1, n);
    const int target = size_dist(rng);
    std::uniform_int_distribution<int> vtx(0, n - 1);
    std::vector<int> picked{vtx(rng)};
    std::vector<char> in(n, 0);
    in[picked[0]] = 1;
    while (static_cast<int>(picked.size()) < target) {
        std::vector<int> boundary;
        for (int v : picked)
            for (int u : host.neighbors(v))
                if (!in[u]) boundary.push_back(u);
        std::sort(boundary.begin(), boundary.end());
        boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
        std::uniform_int_distribution<size_t> pick(0, boundary.size() - 1);
        int v = boundary[pick(rng)];
        picked.push_back(v);
        in[v] = 1;
    }
    std::sort(picked.begin(), picked.end());
    return Subtree(host, picked);
}

SubtreeSystem random_system(const Tree& host, int max_members, std::mt19937_64& rng) {
    if (max_members < 1) throw std::invalid_argument("max_members must be >= 1");
    std::uniform_int_distribution<int> count(1, max_members);
    SubtreeSystem sys(host);
    const int members = count(rng);
    for (int i = 0; i < members; ++i) sys.add(random_subtree(host, rng));
    return sys;
}

}  // namespace treehelly
