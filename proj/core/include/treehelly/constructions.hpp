#ifndef TREEHELLY_CONSTRUCTIONS_HPP
#define TREEHELLY_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "treehelly/graph.hpp"

namespace treehelly {

/// Recipe (H, R, q): q copies of the pattern glued along the root set R.
struct FlowerSpec {
    SimpleGraph pattern;
    std::vector<int> roots;  // sorted, proper subset of V(pattern)
    int multiplicity = 1;    // q >= 1

    FlowerSpec(SimpleGraph pattern, std::vector<int> roots, int multiplicity);
};

/// The glued graph plus provenance. Vertex labels: roots first in pattern
/// order, then copy 0's non-root vertices in pattern order, then copy 1's,
/// and so on.
struct FlowerGraph {
    SimpleGraph graph;
    FlowerSpec spec;
    /// copy_maps[p][pattern vertex] = host vertex (roots map identically in
    /// every copy).
    std::vector<std::vector<int>> copy_maps;
    /// provenance[host vertex] = (copy index or -1 for roots, pattern vertex)
    std::vector<std::pair<int, int>> provenance;
};

FlowerGraph flower(const FlowerSpec& spec);

/// All specs (H, R, q) with R a proper subset whose removal leaves >= k
/// components; ordered by |R| then lexicographically. This is F_{H,k}^q.
std::vector<FlowerSpec> flower_family(const SimpleGraph& h, int k, int q);

/// Generalized theta graph parameters: `strands` paths on 1+segments*segment_length
/// vertices agreeing on the evenly spaced junction vertices.
struct ThetaSpec {
    int strands = 1;         // a >= 1
    int segment_length = 1;  // b >= 1
    int segments = 1;        // c >= 1

    ThetaSpec(int a, int b, int c);
};

/// Vertex labels follow the flower convention over P_{1+cb} with junctions as
/// roots. For segment_length 1 all strands coincide and the result is the
/// path on segments+1 vertices.
SimpleGraph theta(const ThetaSpec& spec);

struct ThetaEmbedding {
    ThetaSpec spec;
    /// theta vertex (per theta() labeling) -> host vertex, injective, all
    /// theta edges present in the host.
    std::vector<int> vertex_map;

    ThetaEmbedding(ThetaSpec s, std::vector<int> m) : spec(s), vertex_map(std::move(m)) {}
};

bool validate_theta_embedding(const SimpleGraph& host, const ThetaEmbedding& emb);

/// Replaces each leaf by m pendant copies attached to its neighbor.
/// K1 and K2 are rejected. Labels: non-leaf vertices first (original order),
/// then the pendants grouped by original leaf.
Tree duplicate_leaves(const Tree& t, int m);

struct DiameterRootSet {
    std::vector<int> roots;  // R, sorted
    int b = 0;               // spacing floor((d-2)/(k-1))
    std::vector<int> longest_path;
};

/// Roots v_{1+ib}, 0 <= i <= k-1, along a fixed longest path. Requires k >= 2
/// and diameter >= 2k. Guarantees w(R) >= k+1 and
/// two_core(flower(t,R,q)) iso theta_{q,b,k-1}.
DiameterRootSet diameter_root_set(const Tree& t, int k);

/// Extracts a theta_{q,b'} embedding (2 <= b' <= floor((t-3)/(k-1))) from a
/// flower over a path pattern whose root set leaves >= k+1 components,
/// taking the q copies of the lexicographically first qualifying component.
/// nullopt would falsify the underlying claim; callers treat it as an error.
std::optional<ThetaEmbedding> find_theta_in_flower(const FlowerSpec& spec, int k);

}  // namespace treehelly

#endif
