#ifndef TREEHELLY_TREE_OPS_HPP
#define TREEHELLY_TREE_OPS_HPP

#include <optional>
#include <vector>

#include "treehelly/graph.hpp"

namespace treehelly {

struct TwoCoreResult {
    SimpleGraph core;
    /// old vertex -> new vertex, -1 for deleted vertices.
    std::vector<int> relabel;
    /// surviving old vertices, sorted; survivors[new] = old.
    std::vector<int> survivors;
};

/// Maximal subgraph of minimum degree >= 2 (possibly empty), obtained by
/// iteratively deleting vertices of degree at most 1.
TwoCoreResult two_core(const SimpleGraph& g);

struct TreeMetrics {
    std::vector<int> leaves;  // vertices of degree <= 1, sorted
    int diameter = 0;         // edge count of a longest path; 0 for K1
    std::vector<int> longest_path;  // v0..vd; ties broken by lexicographically
                                    // smallest (min endpoint, max endpoint) pair
};

TreeMetrics tree_metrics(const Tree& t);

struct RemovalComponents {
    int count = 0;
    std::vector<std::vector<int>> components;  // sorted vertex sets, by min vertex
};

/// Connected components of h - r. This is w(R) plus the component list.
RemovalComponents components_after_removal(const SimpleGraph& h, const std::vector<int>& r);

/// Vertices outside the subtree adjacent to it.
std::vector<int> neighborhood(const Tree& t, const Subtree& sub);

/// Every connected non-empty vertex subset of t, sorted by size then by
/// lexicographic vertex list. Host size is limited to 31 vertices.
std::vector<Subtree> enumerate_subtrees(const Tree& t,
                                        std::optional<int> max_size = std::nullopt);

}  // namespace treehelly

#endif
