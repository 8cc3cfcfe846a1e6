#pragma once

// Plane permutations: a pair (s, pi) of a single long cycle s and an
// arbitrary permutation pi on the same ground set, with the diagonal
// D = s∘pi⁻¹ read off the two-row representation. Block interchanges act on
// the s-sequence and induce pi^h = D⁻¹∘s^h, which keeps D fixed. A signed
// permutation embeds as the skew-symmetric instance whose restricted block
// interchanges are exactly the reversals.

#include <optional>
#include <string>
#include <vector>

#include "revperm/permutation.hpp"
#include "revperm/signed_permutation.hpp"

namespace revperm {

class PlanePermutation {
public:
    // s must be one cycle covering the ground set; anchor starts the two-row
    // display (0 for skew-symmetric instances).
    PlanePermutation(Permutation s, Permutation pi, int anchor);

    const Permutation& s() const { return s_; }
    const Permutation& pi() const { return pi_; }
    int anchor() const { return anchor_; }

    Permutation diagonal() const { return compose(s_, pi_.inverse()); }

    // anchor, s(anchor), s²(anchor), ...
    std::vector<int> s_row() const;
    // pi applied entrywise to s_row
    std::vector<int> pi_row() const;
    std::string two_row_render() const;

private:
    Permutation s_;
    Permutation pi_;
    int anchor_;
};

// Positions into the s-row (anchor at position 0). Blocks [i..j] and [k..l]
// are swapped; position 0 never moves.
struct BlockInterchange {
    int i, j, k, l;

    BlockInterchange(int i_, int j_, int k_, int l_);
};

// (s^h, pi^h) with pi^h = D⁻¹∘s^h; the diagonal is unchanged.
PlanePermutation block_interchange(const PlanePermutation& pp, const BlockInterchange& h);

// The long cycle (0, -1, -2, ..., -n, n, n-1, ..., 1) on {-n..n}.
Permutation p_cycle(int n);
// The long cycle (0, 1, 2, ..., n, -n, -n+1, ..., -1); the skew-symmetric
// cycle of the identity.
Permutation e_natural(int n);

// The plane permutation (s~, p∘s~) of a signed permutation, where the s-row
// is 0, a_1..a_n, -a_n..-a_1. Its diagonal is p⁻¹ by construction.
class SkewSymmetricInstance {
public:
    explicit SkewSymmetricInstance(SignedPermutation a);

    int n() const { return a_.size(); }
    const SignedPermutation& a() const { return a_; }
    const PlanePermutation& plane() const { return plane_; }
    const Permutation& pi() const { return plane_.pi(); }

private:
    SignedPermutation a_;
    PlanePermutation plane_;
};

SkewSymmetricInstance skew_symmetric(const SignedPermutation& a);

// The block interchange (i, j, 2n+1-j, 2n+1-i) realizing reversal i..j.
BlockInterchange reversal_h(int i, int j, int n);

// Instance of reverse(a, rho_{i,j}); its s-row equals the block-interchanged
// s-row of the input instance.
SkewSymmetricInstance apply_reversal(const SkewSymmetricInstance& inst, int i, int j);

// Smallest (i, j) in lexicographic order whose reversal raises C(pi) by
// exactly 2, if any.
std::optional<ReversalStep> find_2_reversal(const SkewSymmetricInstance& inst);

}  // namespace revperm
