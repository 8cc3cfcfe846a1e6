#pragma once

// Dense 0/1 matrix utilities used to cross-check the permutation algebra.
// Convention: entry (i, j) = 1 iff element(i) = sigma(element(j)), rows and
// columns indexed by the ground-set order. Verification-scale only (order
// around 20 or below); everything is plain dense arithmetic.

#include <vector>

#include "revperm/permutation.hpp"

namespace revperm {

class PermutationMatrix {
public:
    static PermutationMatrix identity(int order);
    // Unitary anti-diagonal matrix: entry (i, j) = 1 iff j = order-1-i.
    static PermutationMatrix exchange(int order);
    // No validation; from_matrix rejects anything that is not a permutation matrix.
    static PermutationMatrix from_entries(int order, std::vector<int> entries);

    int order() const { return order_; }
    int at(int row, int col) const;

    PermutationMatrix transpose() const;
    bool is_permutation() const;

    bool operator==(const PermutationMatrix& other) const {
        return order_ == other.order_ && entries_ == other.entries_;
    }
    bool operator!=(const PermutationMatrix& other) const { return !(*this == other); }

private:
    PermutationMatrix(int order, std::vector<int> entries)
        : order_(order), entries_(std::move(entries)) {}

    int order_ = 0;
    std::vector<int> entries_;  // row-major
};

PermutationMatrix to_matrix(const Permutation& sigma);
// Throws if the matrix is not a permutation matrix or orders disagree.
Permutation from_matrix(const PermutationMatrix& m, const GroundSet& ground);
// Plain matrix product; to_matrix(compose(s, t)) == matrix_product(to_matrix(s), to_matrix(t)).
PermutationMatrix matrix_product(const PermutationMatrix& a, const PermutationMatrix& b);

}  // namespace revperm
