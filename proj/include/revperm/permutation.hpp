#pragma once

// Permutation algebra on small integer ground sets: composition, inverse,
// cycle decomposition, involution predicates, same-cycle queries.
// Everything is immutable after construction; operations are pure.

#include <string>
#include <vector>

namespace revperm {

// Ordered finite set of distinct integers. Elements are kept ascending; that
// order drives matrix row/column indexing and canonical cycle output.
class GroundSet {
public:
    explicit GroundSet(std::vector<int> elements);

    // {-n, ..., 0, ..., n}
    static GroundSet signed_range(int n);
    // {-(n+1), ..., 0, ..., n}, the breakpoint ground set
    static GroundSet breakpoint_range(int n);

    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    int element(int index) const { return elems_.at(index); }

    bool contains(int x) const;
    // Position of x in the fixed order; throws std::invalid_argument if absent.
    int index_of(int x) const;

    bool operator==(const GroundSet& other) const { return elems_ == other.elems_; }
    bool operator!=(const GroundSet& other) const { return !(*this == other); }

private:
    std::vector<int> elems_;  // ascending, distinct
    int min_ = 0;
    std::vector<int> pos_;    // dense value -> index lookup, -1 when absent
};

// Total bijection on a GroundSet.
// Composition convention: compose(sigma, tau)(x) = sigma(tau(x)), tau first.
class Permutation {
public:
    static Permutation identity(GroundSet ground);
    // images[i] is the image of ground.element(i); must be a bijection.
    static Permutation from_images(GroundSet ground, const std::vector<int>& images);
    // Cycle notation; elements not mentioned are fixed points.
    static Permutation from_cycles(GroundSet ground,
                                   const std::vector<std::vector<int>>& cycles);
    // The m-cycle row[0] -> row[1] -> ... -> row[m-1] -> row[0];
    // row must list every ground element exactly once.
    static Permutation from_cycle_row(GroundSet ground, const std::vector<int>& row);

    const GroundSet& ground() const { return ground_; }

    int apply(int x) const { return ground_.element(img_[ground_.index_of(x)]); }
    int operator()(int x) const { return apply(x); }

    Permutation inverse() const;

    bool is_identity() const;
    bool is_involution() const;
    std::vector<int> fixed_points() const;

    // Disjoint cycles covering the ground set, fixed points included as
    // 1-cycles. Each cycle starts at its smallest element; cycles are ordered
    // by that element.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;

    bool same_cycle(int x, int y) const;

    // Restriction to a subset closed under the map; throws if not closed.
    Permutation restricted(const std::vector<int>& subset) const;

    bool operator==(const Permutation& other) const {
        return ground_ == other.ground_ && img_ == other.img_;
    }
    bool operator!=(const Permutation& other) const { return !(*this == other); }

    // e.g. "(0 5 -1 4 -5)(1 -4 -3)(2 3 -2)"
    std::string cycle_string() const;

private:
    Permutation(GroundSet ground, std::vector<int> img)
        : ground_(std::move(ground)), img_(std::move(img)) {}

    GroundSet ground_;
    std::vector<int> img_;  // index -> index
};

// sigma∘tau, tau applied first. Throws on ground-set mismatch.
Permutation compose(const Permutation& sigma, const Permutation& tau);

}  // namespace revperm
