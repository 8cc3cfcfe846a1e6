#pragma once

// Batch verification battery behind the CLI `verify` subcommand: bound
// equivalence and the same-cycle statement over an exhaustive-plus-random
// corpus, the involution product properties, and the matrix factorization.

#include <cstdint>
#include <string>
#include <vector>

namespace revperm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int exhaustive_n = 3;          // run every permutation for n <= this
    int max_n = 10;                // random permutations for exhaustive_n < n <= max_n
    std::uint64_t samples = 1000;  // random permutations per n
    std::uint64_t seed = 1;
    int involution_pairs = 500;    // pairs per involution property
    int max_set_size = 25;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace revperm
