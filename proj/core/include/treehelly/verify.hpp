#ifndef TREEHELLY_VERIFY_HPP
#define TREEHELLY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace treehelly {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The acceptance suite. Each check is self-contained and deterministic for a
/// fixed seed; checks without randomness ignore the seed.
CheckResult check_edge_helly_exhaustive();                 // all small P6 systems
CheckResult check_edge_helly_randomized(uint64_t seed);    // random trees <= 9
CheckResult check_solver_oracle_equivalence(uint64_t seed);
CheckResult check_counting_identities();
CheckResult check_construction_identities();
CheckResult check_leaf_diameter_inequality();
CheckResult check_theta_in_flower();
CheckResult check_key_observation_bound();
CheckResult check_pierce_or_witness_soundness();
CheckResult check_nice_tuple_layer();
CheckResult check_extremal_harness();

std::vector<CheckResult> run_acceptance_suite(uint64_t seed);

}  // namespace treehelly

#endif
