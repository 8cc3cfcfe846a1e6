#pragma once

// The three reversal-distance lower bounds and their equivalence checks:
//   plane:  (2n+1 - C(p∘s~)) / 2
//   bg:     n+1 - C_BG(a), equivalently (2n+2 - C(theta1∘theta2)) / 2
//   genus:  genus of the fatgraph of a
// plus the involution factorization p∘s~ = p_invo∘s_invo and the same-cycle
// statement for n and s_n.

#include <string>
#include <utility>
#include <vector>

#include "revperm/permutation.hpp"
#include "revperm/signed_permutation.hpp"

namespace revperm {

// Doubled breakpoint sequence b_0..b_{2n+1} on {-(n+1)..n} with the two
// fixed-point-free pairings: theta1 joins consecutive pairs (b_{2i}, b_{2i+1})
// (black edges), theta2 joins (i, -(i+1)) (grey edges).
struct BreakpointData {
    std::vector<int> b;
    Permutation theta1;
    Permutation theta2;
};

BreakpointData breakpoint(const SignedPermutation& a);

int bound_plane(const SignedPermutation& a);

// Alternating black/grey cycle count of the breakpoint graph, by explicit
// traversal (independent of the theta permutations).
int bg_cycle_count(const SignedPermutation& a);

// Computes both routes (cycle walk and theta product), insists they agree.
int bound_bg(const SignedPermutation& a);

// (p_invo, s_invo): the involutions with unique fixed points n and s_n whose
// product is p∘s~. Built from their explicit pair structure, not from p and s~.
std::pair<Permutation, Permutation> involution_factors(const SignedPermutation& a);

struct BoundReport {
    int n;
    int c_plane;  // C(p∘s~)
    int c_theta;  // C(theta1∘theta2)
    int c_bg;     // alternating cycle count
    int bound_plane;
    int bound_bg;
    int bound_genus;

    std::string to_json() const;  // {"n":..,"c_plane":..,"c_theta":..,"c_bg":..,"bound":..}
};

// Fills a BoundReport and throws std::logic_error if any of the identities
// c_plane = c_theta - 1, c_theta = 2*c_bg, or bound equality fails.
BoundReport check_equivalence(const SignedPermutation& a);

// True iff n and s_n share a cycle of p∘s~ (always true; a false return would
// indicate an implementation bug, not a counterexample).
bool check_conjecture(const SignedPermutation& a);
// Same, from a raw long cycle; validates the cycle is skew-symmetric on
// {-n..n} before evaluating.
bool check_conjecture(const Permutation& s_tilde);

// Extends two involutions with unique fixed points a, b on the same set into
// fixed-point-free involutions on the set plus fresh_element, by pairing each
// fixed point with the new element.
std::pair<Permutation, Permutation> extend_involutions(const Permutation& sigma1,
                                                       const Permutation& sigma2,
                                                       int fresh_element);

}  // namespace revperm
