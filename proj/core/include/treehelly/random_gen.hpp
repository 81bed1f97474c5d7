#ifndef TREEHELLY_RANDOM_GEN_HPP
#define TREEHELLY_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "treehelly/graph.hpp"

namespace treehelly {

/// Uniformly random labeled tree on n vertices via Pruefer decoding.
Tree random_tree(int n, std::mt19937_64& rng);

/// Random connected vertex subset: random target size, random start vertex,
/// grown one uniformly chosen boundary vertex at a time.
Subtree random_subtree(const Tree& host, std::mt19937_64& rng);

/// System with a random number of members in [1, max_members].
SubtreeSystem random_system(const Tree& host, int max_members, std::mt19937_64& rng);

}  // namespace treehelly

#endif
