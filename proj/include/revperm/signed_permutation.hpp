#pragma once

// Signed permutations a_1 ... a_n (magnitudes a permutation of 1..n, each
// entry carrying a sign), the reversal operation, text I/O and generation.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace revperm {

// Reversal acting on positions i..j (1-based, i <= j): the block is reversed
// in place and every entry in it flips sign.
struct ReversalStep {
    int i;
    int j;

    ReversalStep(int i_, int j_);
    bool operator==(const ReversalStep& o) const { return i == o.i && j == o.j; }
};

class SignedPermutation {
public:
    // Validates: entries nonzero, magnitudes a permutation of 1..n.
    explicit SignedPermutation(std::vector<int> entries);

    static SignedPermutation identity(int n);
    // Accepts whitespace- or comma-separated signed integers.
    static SignedPermutation parse(const std::string& text);
    static SignedPermutation random(int n, std::uint64_t seed);

    int size() const { return static_cast<int>(entries_.size()); }
    int at(int pos) const;  // 1-based
    const std::vector<int>& entries() const { return entries_; }

    bool is_identity() const;
    std::string format() const;  // e.g. "-5 1 -3 2 4"

    bool operator==(const SignedPermutation& o) const { return entries_ == o.entries_; }
    bool operator!=(const SignedPermutation& o) const { return !(*this == o); }

private:
    std::vector<int> entries_;
};

SignedPermutation reverse(const SignedPermutation& a, const ReversalStep& step);

// All 2^n * n! signed permutations, magnitudes in lexicographic order, signs
// per magnitude arrangement as an n-bit counter (bit k set = position k+1
// negative). The identity is yielded first. Guarded to n <= 8.
void enumerate_all(int n, const std::function<void(const SignedPermutation&)>& fn);
// Materialized convenience for small n (guarded to n <= 6).
std::vector<SignedPermutation> all_signed_permutations(int n);

// Draw from an already-seeded engine; random(n, seed) is a one-shot wrapper.
SignedPermutation draw_random(int n, std::mt19937_64& rng);

}  // namespace revperm
