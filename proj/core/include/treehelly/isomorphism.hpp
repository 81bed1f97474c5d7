#ifndef TREEHELLY_ISOMORPHISM_HPP
#define TREEHELLY_ISOMORPHISM_HPP

#include <optional>
#include <string>
#include <vector>

#include "treehelly/graph.hpp"

namespace treehelly {

/// Backtracking isomorphism test with degree-sequence pruning; returns a
/// witness mapping g -> h when one exists.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h);

inline bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    return find_isomorphism(g, h).has_value();
}

/// Minimum upper-triangle bitstring over all vertex permutations. Only
/// intended for small graphs (n <= 8); used to deduplicate enumeration.
std::string canonical_key(const SimpleGraph& g);

/// Canonical string for a tree (centroid-rooted AHU encoding); linear-ish and
/// usable well past the canonical_key size limit.
std::string tree_canonical_key(const Tree& t);

/// All pairwise non-isomorphic trees on n vertices, deterministic order.
std::vector<Tree> enumerate_trees(int n);

}  // namespace treehelly

#endif
