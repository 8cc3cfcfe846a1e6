#include "revperm/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace revperm {

ReversalStep::ReversalStep(int i_, int j_) : i(i_), j(j_) {
    if (i < 1 || j < i)
        throw std::invalid_argument("reversal step requires 1 <= i <= j");
}

SignedPermutation::SignedPermutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
    const int n = size();
    if (n < 1) throw std::invalid_argument("signed permutation must be nonempty");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries_) {
        if (v == 0) throw std::invalid_argument("zero entry in signed permutation");
        const int mag = std::abs(v);
        if (mag > n)
            throw std::invalid_argument("magnitude " + std::to_string(mag) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(mag)])
            throw std::invalid_argument("duplicate magnitude " + std::to_string(mag));
        seen[static_cast<size_t>(mag)] = 1;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<int> e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
    std::vector<int> entries;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed token '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("malformed token '" + token + "'");
        entries.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            token += c;
    }
    flush();
    if (entries.empty()) throw std::invalid_argument("no entries to parse");
    return SignedPermutation(std::move(entries));
}

SignedPermutation SignedPermutation::random(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return draw_random(n, rng);
}

int SignedPermutation::at(int pos) const {
    if (pos < 1 || pos > size())
        throw std::invalid_argument("position out of range");
    return entries_[static_cast<size_t>(pos - 1)];
}

bool SignedPermutation::is_identity() const {
    for (int k = 0; k < size(); ++k)
        if (entries_[static_cast<size_t>(k)] != k + 1) return false;
    return true;
}

std::string SignedPermutation::format() const {
    std::string out;
    for (size_t k = 0; k < entries_.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(entries_[k]);
    }
    return out;
}

SignedPermutation reverse(const SignedPermutation& a, const ReversalStep& step) {
    if (step.j > a.size())
        throw std::invalid_argument("reversal step out of range");
    std::vector<int> e = a.entries();
    std::reverse(e.begin() + (step.i - 1), e.begin() + step.j);
    for (int k = step.i - 1; k < step.j; ++k) e[static_cast<size_t>(k)] = -e[static_cast<size_t>(k)];
    return SignedPermutation(std::move(e));
}

void enumerate_all(int n, const std::function<void(const SignedPermutation&)>& fn) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > 8) throw std::invalid_argument("enumeration capped at n = 8");
    std::vector<int> mags(static_cast<size_t>(n));
    std::iota(mags.begin(), mags.end(), 1);
    std::vector<int> entries(static_cast<size_t>(n));
    do {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            for (int k = 0; k < n; ++k) {
                const int m = mags[static_cast<size_t>(k)];
                entries[static_cast<size_t>(k)] = (mask >> k) & 1u ? -m : m;
            }
            fn(SignedPermutation(entries));
        }
    } while (std::next_permutation(mags.begin(), mags.end()));
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    if (n > 6)
        throw std::invalid_argument("materialized enumeration capped at n = 6");
    std::vector<SignedPermutation> out;
    enumerate_all(n, [&](const SignedPermutation& a) { out.push_back(a); });
    return out;
}

SignedPermutation draw_random(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<int> e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    // Fisher-Yates with modulo draw; bias is irrelevant here and the modulo
    // keeps output identical across platforms (distributions are not pinned
    // by the standard, the engine is).
    for (int k = n - 1; k > 0; --k) {
        const auto r = static_cast<size_t>(rng() % static_cast<std::uint64_t>(k + 1));
        std::swap(e[static_cast<size_t>(k)], e[r]);
    }
    for (int k = 0; k < n; ++k)
        if (rng() & 1u) e[static_cast<size_t>(k)] = -e[static_cast<size_t>(k)];
    return SignedPermutation(std::move(e));
}

}  // namespace revperm
