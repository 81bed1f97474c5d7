#ifndef TREEHELLY_GRAPH_HPP
#define TREEHELLY_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treehelly {

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
/// Immutable once built through the usual construction paths; add_edge is
/// only meant for the building phase.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int n() const { return n_; }
    int m() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<size_t>(u) * n_ + v] != 0;
    }

    /// Adds {u,v}. Loops and out-of-range endpoints throw; re-adding an
    /// existing edge is a no-op.
    void add_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    std::vector<std::vector<int>> components() const;

    bool connected() const;

    /// Two-coloring if one exists (vector of 0/1 per vertex), empty otherwise.
    bool bipartite(std::vector<int>* coloring = nullptr) const;

    /// Induced subgraph on `vertices` (sorted, deduplicated internally);
    /// vertex i of the result corresponds to the i-th listed vertex.
    SimpleGraph induced(const std::vector<int>& vertices) const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<uint8_t> adj_;  // n*n adjacency matrix
};

/// Connected acyclic SimpleGraph; validated at construction.
class Tree {
public:
    explicit Tree(SimpleGraph g);

    const SimpleGraph& graph() const { return g_; }
    int n() const { return g_.n(); }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
    int degree(int v) const { return g_.degree(v); }
    std::vector<int> neighbors(int v) const { return g_.neighbors(v); }
    std::vector<std::pair<int, int>> edges() const { return g_.edges(); }

    /// Path on t vertices labeled 0..t-1 along the path.
    static Tree path(int t);
    /// Star with center 0 and leaves 1..leaves.
    static Tree star(int leaves);

private:
    SimpleGraph g_;
};

/// Non-empty connected vertex subset of a host tree. Stored sorted.
class Subtree {
public:
    Subtree(const Tree& host, std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    bool contains(int v) const;

    bool operator==(const Subtree& other) const { return vertices_ == other.vertices_; }
    bool operator<(const Subtree& other) const;

private:
    std::vector<int> vertices_;
};

/// A host tree together with a list of subtrees (duplicates permitted).
class SubtreeSystem {
public:
    explicit SubtreeSystem(Tree host) : host_(std::move(host)) {}
    SubtreeSystem(Tree host, std::vector<Subtree> members);

    const Tree& host() const { return host_; }
    const std::vector<Subtree>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

    void add(Subtree s);
    void add(const std::vector<int>& vertices) { add(Subtree(host_, vertices)); }

private:
    Tree host_;
    std::vector<Subtree> members_;
};

}  // namespace treehelly

#endif
