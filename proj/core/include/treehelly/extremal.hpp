#ifndef TREEHELLY_EXTREMAL_HPP
#define TREEHELLY_EXTREMAL_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "treehelly/constructions.hpp"
#include "treehelly/counting.hpp"
#include "treehelly/graph.hpp"

namespace treehelly {

/// Forbidden family: plain graphs plus flower recipes expanded on demand.
/// Every expanded member must contain at least one edge.
class FamilySpec {
public:
    FamilySpec(std::vector<SimpleGraph> graphs, std::vector<FlowerSpec> flowers = {});

    /// All members as concrete graphs, plain ones first.
    const std::vector<SimpleGraph>& members() const { return expanded_; }

private:
    std::vector<SimpleGraph> expanded_;
};

/// One representative per isomorphism class, ordered by canonical key.
/// Native enumeration (vertex augmentation with canonical dedup) up to n = 8.
std::vector<SimpleGraph> enumerate_graphs(int n);

/// Ingests a newline-delimited graph6 corpus for orders beyond native reach.
std::vector<SimpleGraph> enumerate_graphs(int n, std::istream& graph6_stream);

struct FreenessResult {
    bool free = true;
    std::optional<size_t> member_index;   // offending family member
    std::optional<Monomorphism> witness;  // verified embedding of that member
};

FreenessResult is_family_free(const SimpleGraph& g, const FamilySpec& f);

struct ExtremalRecord {
    int n = 0;
    int64_t value = 0;
    std::vector<std::string> extremal_graphs;  // graph6, all optima up to iso
};

/// ex(n, F): maximum edges over F-free graphs on n vertices.
ExtremalRecord extremal_number(int n, const FamilySpec& f);

/// ex(n, T, F): maximum number of copies of T over F-free graphs.
ExtremalRecord generalized_extremal_number(int n, const Tree& t, const FamilySpec& f);

struct DichotomyCase {
    std::vector<int> roots;
    std::optional<int> q_found;            // smallest q <= q_max with a member inside H_R^q
    std::optional<size_t> member_index;    // which member embeds
    /// set when Case 2 is certified for all q, not just up to q_max
    std::optional<std::string> structural_certificate;
};

struct DichotomyReport {
    std::vector<DichotomyCase> cases;
    bool case2 = false;
    int q_max = 0;
    // Lower-bound construction for the first Case-2 root set:
    std::optional<std::vector<int>> case2_roots;
    int n_prime = 0;
    std::optional<std::string> lower_bound_graph;  // graph6 of flower(T, R, n')
    bool lower_bound_free = false;
    int64_t lower_bound_copies = 0;
    bool copies_bound_met = false;  // copies >= n'^(k+1)
};

/// For each R with w(R) >= k+1, search q <= q_max for a family member inside
/// H_R^q (Case 1); otherwise flag Case 2 and emit a verified F-free flower on
/// ~n vertices with at least (n')^(k+1) copies of T. Exhausting q_max is
/// evidence only, unless a structural certificate (bipartite flower vs.
/// non-bipartite family) settles Case 2 outright.
DichotomyReport dichotomy_probe(const Tree& t, const FamilySpec& f, int k, int q_max, int n);

}  // namespace treehelly

#endif
