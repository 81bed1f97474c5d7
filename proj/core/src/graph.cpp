#include "treehelly/graph.hpp"

#include <algorithm>
#include <queue>

namespace treehelly {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<size_t>(n) * n, 0);
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
    ++m_;
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[static_cast<size_t>(v) * n_ + u];
    return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[static_cast<size_t>(u) * n_ + v]) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool SimpleGraph::connected() const {
    return n_ <= 1 || components().size() == 1;
}

bool SimpleGraph::bipartite(std::vector<int>* coloring) const {
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    q.push(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    if (coloring) *coloring = std::move(color);
    return true;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) check_vertex(v);
    SimpleGraph out(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Tree::Tree(SimpleGraph g) : g_(std::move(g)) {
    if (g_.n() == 0) throw std::invalid_argument("tree must be non-empty");
    if (!g_.connected() || g_.m() != g_.n() - 1)
        throw std::invalid_argument("graph is not a tree (connected with e = n-1 required)");
}

Tree Tree::path(int t) {
    if (t < 1) throw std::invalid_argument("path needs at least one vertex");
    SimpleGraph g(t);
    for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
    return Tree(std::move(g));
}

Tree Tree::star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("negative leaf count");
    SimpleGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return Tree(std::move(g));
}

Subtree::Subtree(const Tree& host, std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("subtree must be non-empty");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (int v : vertices_) host.graph().check_vertex(v);
    if (!host.graph().induced(vertices_).connected())
        throw std::invalid_argument("subtree vertex set is not connected in host");
}

bool Subtree::contains(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Subtree::operator<(const Subtree& other) const {
    if (vertices_.size() != other.vertices_.size())
        return vertices_.size() < other.vertices_.size();
    return vertices_ < other.vertices_;
}

SubtreeSystem::SubtreeSystem(Tree host, std::vector<Subtree> members)
    : host_(std::move(host)), members_(std::move(members)) {
    for (const Subtree& s : members_)
        for (int v : s.vertices()) host_.graph().check_vertex(v);
}

void SubtreeSystem::add(Subtree s) {
    for (int v : s.vertices()) host_.graph().check_vertex(v);
    members_.push_back(std::move(s));
}

}  // namespace treehelly
