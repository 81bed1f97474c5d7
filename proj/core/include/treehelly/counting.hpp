#ifndef TREEHELLY_COUNTING_HPP
#define TREEHELLY_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "treehelly/graph.hpp"

namespace treehelly {

/// An injective homomorphism is stored as its image array: map[pattern
/// vertex] = host vertex.
using Monomorphism = std::vector<int>;

bool is_monomorphism(const SimpleGraph& pattern, const SimpleGraph& host, const Monomorphism& m);

struct MonomorphismList {
    std::vector<Monomorphism> maps;
    bool truncated = false;  // cap hit; maps holds the first `cap` in order
};

/// Complete list in deterministic backtracking order (lexicographic in the
/// image array).
MonomorphismList enumerate_monomorphisms(const SimpleGraph& pattern, const SimpleGraph& host,
                                         std::optional<int64_t> cap = std::nullopt);

int64_t count_monomorphisms(const SimpleGraph& pattern, const SimpleGraph& host);

/// |Aut(pattern)| by exhaustive enumeration; limited to 10 vertices.
int64_t automorphism_count(const SimpleGraph& pattern);

/// Number of copies (subgraphs isomorphic to the pattern): mon/aut.
int64_t count_copies(const SimpleGraph& pattern, const SimpleGraph& host);

/// Monomorphisms of a common pattern into a common host; optionally carries
/// the partition witness of the distinguishing property (host vertex ->
/// pattern vertex class, -1 when unconstrained).
struct MonomorphismFamily {
    SimpleGraph pattern;
    SimpleGraph host;
    std::vector<Monomorphism> members;
    std::optional<std::vector<int>> partition;
};

/// True iff per-pattern-vertex image classes are pairwise disjoint.
bool is_distinguishing(const MonomorphismFamily& fam);

/// Distinguishing subfamily of Mon(pattern, host) of size at least
/// mon / v(H)^v(H), with the partition witness attached. Tries seeded random
/// partitions first, then a deterministic conditional-expectation greedy that
/// meets the bound by construction.
MonomorphismFamily extract_distinguishing(const SimpleGraph& pattern, const SimpleGraph& host,
                                          uint64_t seed);

/// The family of all copy maps of a flower: member p maps the pattern onto
/// copy p. Distinguishing by construction; handy as a deterministic fixture.
struct FlowerGraph;  // fwd from constructions.hpp
MonomorphismFamily canonical_flower_family(const FlowerGraph& fg);

struct Sunflower {
    std::vector<int> kernel;       // R, pattern vertices, sorted, proper subset
    std::vector<Monomorphism> petals;  // q maps agreeing exactly on R
};

/// Searches for q distinct members agreeing exactly on some R ( V(H) with
/// pairwise-disjoint images elsewhere: the union of their graph-images is a
/// copy of H_R^q. Candidate kernels are pairwise image intersections plus
/// the empty set; petals are packed greedily in member order.
std::optional<Sunflower> sunflower_extract(const MonomorphismFamily& fam, int q);

bool validate_sunflower(const MonomorphismFamily& fam, const Sunflower& s);

/// Restriction of a monomorphism to a subtree: values in subtree vertex order.
using Restriction = std::vector<int>;

struct ExtendableSet {
    std::vector<int> subtree_vertices;  // V(T'), sorted
    std::vector<int> anchor_image;      // S, sorted
    std::vector<Restriction> restrictions;  // deduplicated, pointwise-distinct
};

/// Psi(T', S; Phi): restrictions to T' of members mapping N(T') onto S.
ExtendableSet extendable_set(const Tree& pattern, const Subtree& sub,
                             const std::vector<int>& anchor_image,
                             const MonomorphismFamily& fam);

/// T_{phi,Phi,C}: subtrees whose extendable set at phi's anchor has size >= c.
SubtreeSystem highly_extendable_subtrees(const Tree& pattern, const Monomorphism& phi,
                                         const MonomorphismFamily& fam, int64_t c);

/// (phi,Phi)-pseudo-piercing: some subtree vertex has at most v(T) possible
/// images among members agreeing with phi on w.
bool pseudo_pierces(const std::vector<int>& w, const Subtree& sub, const Monomorphism& phi,
                    const MonomorphismFamily& fam);

struct RefinementReport {
    std::vector<int64_t> level_sizes;
    std::vector<int64_t> level_constants;
    std::vector<std::vector<int>> common_system;  // vertex sets, present when S2 holds
    bool s1_nested_distinguishing = false;
    bool s2_common_system = false;
    bool s3_disjoint_extensions = false;
    bool s4_not_pseudo_pierced = false;
    bool s5_size_bound = false;
};

/// Checks the refinement-sequence conditions on levels (Phi_1, ..., Phi_t)
/// with Phi_{i+1} expected inside Phi_i. `constants` are C_1..C_{t-1};
/// c_lo/c_hi are C'/C''. S4 searches all (<=a edges, <=b vertices) budgets
/// exhaustively.
RefinementReport check_refinement_conditions(const Tree& pattern,
                                             const std::vector<MonomorphismFamily>& levels,
                                             const std::vector<int64_t>& constants,
                                             int64_t c_lo, int64_t c_hi, int a, int b);

}  // namespace treehelly

#endif
