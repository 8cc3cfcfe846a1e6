#pragma once

// Shared helpers for the test suites. The row builders here are written from
// scratch (not via the plane-permutation module) so the goldens they feed are
// an independent route to the same objects.

#include <algorithm>
#include <random>
#include <vector>

#include "revperm/permutation.hpp"
#include "revperm/signed_permutation.hpp"

namespace testutil {

using revperm::GroundSet;
using revperm::Permutation;
using revperm::SignedPermutation;

// 0, -1, -2, ..., -n, n, n-1, ..., 1
inline std::vector<int> p_row(int n) {
    std::vector<int> row;
    for (int v = 0; v >= -n; --v) row.push_back(v);
    for (int v = n; v >= 1; --v) row.push_back(v);
    return row;
}

// 0, a_1..a_n, -a_n..-a_1
inline std::vector<int> s_tilde_row(const SignedPermutation& a) {
    std::vector<int> row{0};
    for (int k = 1; k <= a.size(); ++k) row.push_back(a.at(k));
    for (int k = a.size(); k >= 1; --k) row.push_back(-a.at(k));
    return row;
}

// 0, 1, ..., n, -n, ..., -1
inline std::vector<int> e_natural_row(int n) {
    std::vector<int> row;
    for (int v = 0; v <= n; ++v) row.push_back(v);
    for (int v = -n; v <= -1; ++v) row.push_back(v);
    return row;
}

// Rotate each cycle to start at its minimum, drop nothing, order by minimum;
// matches the canonical form produced by Permutation::cycles().
inline std::vector<std::vector<int>> canon_cycles(std::vector<std::vector<int>> cycles) {
    for (auto& c : cycles) {
        const auto min_it = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), min_it, c.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cycles;
}

inline Permutation random_permutation(const GroundSet& ground, std::mt19937_64& rng) {
    std::vector<int> images = ground.elements();
    for (size_t k = images.size(); k > 1; --k)
        std::swap(images[k - 1], images[rng() % k]);
    return Permutation::from_images(ground, images);
}

// Pairs shuffled elements; on an odd set the leftover element stays fixed.
inline Permutation random_involution(const GroundSet& ground, std::mt19937_64& rng) {
    std::vector<int> order = ground.elements();
    for (size_t k = order.size(); k > 1; --k)
        std::swap(order[k - 1], order[rng() % k]);
    std::vector<std::vector<int>> pairs;
    for (size_t k = 0; k + 1 < order.size(); k += 2)
        pairs.push_back({order[k], order[k + 1]});
    return Permutation::from_cycles(ground, pairs);
}

inline GroundSet range_set(int size) {
    std::vector<int> e;
    for (int v = 0; v < size; ++v) e.push_back(v);
    return GroundSet(std::move(e));
}

// Single long cycle visiting all elements in shuffled order.
inline Permutation random_long_cycle(const GroundSet& ground, std::mt19937_64& rng) {
    std::vector<int> row = ground.elements();
    for (size_t k = row.size(); k > 1; --k)
        std::swap(row[k - 1], row[rng() % k]);
    return Permutation::from_cycle_row(ground, row);
}

}  // namespace testutil
