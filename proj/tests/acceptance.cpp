// Acceptance driver: runs every suite check once and prints one line per
// criterion. Exit status 0 iff everything passes.

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "treehelly/verify.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 20250825;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    bool all_pass = true;
    for (const treehelly::CheckResult& r : treehelly::run_acceptance_suite(seed)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
