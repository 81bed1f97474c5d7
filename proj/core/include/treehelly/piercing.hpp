#ifndef TREEHELLY_PIERCING_HPP
#define TREEHELLY_PIERCING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treehelly/counting.hpp"
#include "treehelly/graph.hpp"

namespace treehelly {

/// An (a,b)-piercing candidate: up to a host edges plus up to b host vertices.
struct PiercingSet {
    std::vector<std::pair<int, int>> edges;  // (u,v) with u < v
    std::vector<int> vertices;
};

/// True iff every member meets vertices union the edge endpoints.
bool pierces(const PiercingSet& p, const SubtreeSystem& sys);

/// Minimum edge piercing set; among minima, the lexicographically least edge
/// list. Exact branch-and-bound for the size, then lexicographic search at
/// that size. Empty system -> empty set; a K1 host with members is rejected.
std::vector<std::pair<int, int>> min_edge_piercing(const SubtreeSystem& sys);

/// Same optimum size computed by the constructive recursion (least-labeled
/// leaf x; the member {x} either forces the unique pendant edge or x is
/// deleted). The returned edge set may differ from min_edge_piercing but
/// always has the same cardinality.
std::vector<std::pair<int, int>> min_edge_piercing_recursive(const SubtreeSystem& sys);

struct HellyReport {
    int k = 0;
    bool local_ok = false;
    /// member indices of a smallest offending subfamily when local_ok fails
    std::optional<std::vector<int>> violating;
    bool global_ok = false;
    std::optional<int> min_size;  // absent only for an unpierceable system
    /// false would be a counterexample to the local-to-global theorem
    bool verdict = false;
};

HellyReport edge_helly_check(const SubtreeSystem& sys, int k);

struct NeighborConditionResult {
    bool ok = false;
    /// a (k+1)-tuple of member indices with no interacting pair, on failure
    std::optional<std::vector<int>> violating;
};

/// Checks that every selection of k+1 members contains a pair i != j with
/// (V(T'_i) u N(T'_i)) meeting V(T'_j).
NeighborConditionResult neighbor_condition_check(const SubtreeSystem& sys, int k);

/// First (<= a edges, <= b vertices) piercing set in deterministic budget
/// order, or nullopt.
std::optional<PiercingSet> mixed_piercing_search(const SubtreeSystem& sys, int a, int b);

struct MixedProbeResult {
    int trials_run = 0;
    /// a system whose h-subfamilies are all (a,b)-pierceable while the whole
    /// system is not
    std::optional<SubtreeSystem> counterexample;
};

/// Random search for a local-to-global gap at budget (a,b) with locality h,
/// over seeded random systems on random trees of at most max_n vertices.
MixedProbeResult mixed_helly_probe(int max_n, int max_members, int a, int b, int h, int trials,
                                   uint64_t seed);

/// q monomorphisms of the pattern tree into a host graph agreeing exactly on
/// the root set: their union is a copy of flower(pattern, roots, q).
struct FlowerEmbedding {
    std::vector<int> roots;  // pattern vertices, sorted
    std::vector<Monomorphism> maps;
};

/// Full re-validation: each map a monomorphism into g, cross-map equalities
/// exactly on the roots, pattern minus roots has >= k+1 components, and the
/// union of graph-images is isomorphic to the flower.
bool validate_flower_embedding(const SimpleGraph& g, const Tree& pattern, int k,
                               const FlowerEmbedding& emb);

struct Certificate {
    enum class Kind { Pierced, Witness, Inconclusive };
    Kind kind = Kind::Inconclusive;
    PiercingSet piercing;                   // Pierced: <= k pattern-tree edges
    std::optional<FlowerEmbedding> witness;  // Witness: flower embedding in g
    std::string note;                        // Inconclusive: why
};

/// Either pierces the highly extendable subtrees of phi by <= k pattern
/// edges, or amalgamates sunflowers over a violating (k+1)-tuple into a
/// flower embedding with >= k+1 root-free components. Inconclusive when some
/// sunflower extraction fails at the given scale c. Both certificate kinds
/// are machine-verified before being returned.
Certificate pierce_or_witness(const SimpleGraph& g, const Tree& pattern, int k, int q, int64_t c,
                              const MonomorphismFamily& fam, const Monomorphism& phi);

/// 2k interval members of a path system, one per matching endpoint.
struct NiceTuple {
    std::vector<Subtree> trees;               // T_1..T_2k
    std::vector<std::pair<int, int>> matching;  // k disjoint path edges, sorted
    std::vector<int> endpoints;               // x_1 < ... < x_2k
};

/// The nice tuple induced by the matching, if any: each T_i is a minimal
/// member containing endpoint i and no other endpoint. The structural
/// consequences (interval order, endpoint coincidences, gaps, restricted
/// intersections) are asserted before returning.
std::optional<NiceTuple> find_nice_tuple(const SubtreeSystem& sys,
                                         const std::vector<std::pair<int, int>>& matching);

/// Index 1 < i* < 2k (1-based) of a tuple tree with at most
/// (t-3)/(k-1) - 1 vertices, scanning the even interstitial positions.
/// Requires k >= 3 and t not congruent to 2 mod (k-1).
int small_tree_locate(const NiceTuple& tuple, int t, int k);

}  // namespace treehelly

#endif
