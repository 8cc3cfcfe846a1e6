#pragma once

// Exact reversal distance by breadth-first search over packed states, a
// greedy cycle-raising sorter, certificate replay, and bound-tightness
// surveys against the exact distance.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "revperm/signed_permutation.hpp"

namespace revperm {

inline constexpr int kDefaultBfsCap = 7;

// Minimum number of reversals sorting a into the positive identity.
// Throws when a.size() exceeds max_n (state space is 2^n * n!).
int exact_distance(const SignedPermutation& a, int max_n = kDefaultBfsCap);

struct SortCertificate {
    SignedPermutation start;
    std::vector<ReversalStep> steps;
};

// Replays the steps; true iff the result is the identity.
bool validate(const SortCertificate& cert);

// Repeatedly applies a cycle-raising reversal (+2 if one exists, otherwise
// the best-available change, ties to the smallest (i, j)). Throws if no
// certificate is found within 4n steps.
SortCertificate greedy_sort(const SignedPermutation& a);

struct SurveyReport {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t tight = 0;                    // gap == 0
    std::map<int, std::uint64_t> histogram;     // gap -> count
    double runtime_ms = 0.0;

    std::string to_json() const;
    std::string to_csv() const;  // rows "gap,count"
};

// gap = exact_distance - bound_plane over all 2^n * n! permutations (n <= 6).
SurveyReport survey_exhaustive(int n, int max_n = kDefaultBfsCap);
// Same over `count` seeded random permutations.
SurveyReport survey_sampled(int n, std::uint64_t count, std::uint64_t seed,
                            int max_n = kDefaultBfsCap);

}  // namespace revperm
