#include "revperm/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "revperm/bounds.hpp"
#include "revperm/perm_matrix.hpp"
#include "revperm/plane_permutation.hpp"
#include "revperm/signed_permutation.hpp"

namespace revperm {

namespace {

void shuffle_values(std::vector<int>& values, std::mt19937_64& rng) {
    for (size_t k = values.size(); k > 1; --k)
        std::swap(values[k - 1], values[rng() % k]);
}

// Pair shuffled elements; odd sets leave the last element fixed.
Permutation random_involution(const GroundSet& ground, std::mt19937_64& rng) {
    std::vector<int> order = ground.elements();
    shuffle_values(order, rng);
    std::vector<std::vector<int>> pairs;
    for (size_t k = 0; k + 1 < order.size(); k += 2)
        pairs.push_back({order[k], order[k + 1]});
    return Permutation::from_cycles(ground, pairs);
}

GroundSet range_set(int size) {
    std::vector<int> e(static_cast<size_t>(size));
    std::iota(e.begin(), e.end(), 0);
    return GroundSet(std::move(e));
}

template <typename Fn>
CheckResult corpus_check(const std::string& name, const VerifyOptions& opts, Fn&& fn) {
    std::uint64_t checked = 0;
    std::string failure;
    auto run = [&](const SignedPermutation& a) {
        if (!failure.empty()) return;
        ++checked;
        try {
            if (!fn(a)) failure = "failed on " + a.format();
        } catch (const std::exception& e) {
            failure = std::string(e.what()) + " on " + a.format();
        }
    };
    for (int n = 1; n <= opts.exhaustive_n && failure.empty(); ++n)
        enumerate_all(n, run);
    std::mt19937_64 rng(opts.seed);
    for (int n = opts.exhaustive_n + 1; n <= opts.max_n && failure.empty(); ++n)
        for (std::uint64_t k = 0; k < opts.samples && failure.empty(); ++k)
            run(draw_random(n, rng));
    if (!failure.empty()) return {name, false, failure};
    return {name, true, std::to_string(checked) + " permutations"};
}

CheckResult check_noodd(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed + 100);
    for (int t = 0; t < opts.involution_pairs; ++t) {
        const int m = 2 * (1 + static_cast<int>(rng() % (static_cast<std::uint64_t>(opts.max_set_size) / 2)));
        const GroundSet ground = range_set(m);
        const Permutation s1 = random_involution(ground, rng);
        const Permutation s2 = random_involution(ground, rng);
        const Permutation step = compose(s2, s1);
        for (int x : ground.elements()) {
            int y = x;
            for (int k = 1; k <= m; ++k) {
                y = step.apply(y);
                if (s1.apply(y) == x)
                    return {"lemma-noodd", false,
                            "sigma1 (sigma2 sigma1)^k fixed " + std::to_string(x) +
                                " at k=" + std::to_string(k)};
            }
        }
    }
    return {"lemma-noodd", true, std::to_string(opts.involution_pairs) + " involution pairs"};
}

CheckResult check_keylem_and_extension(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed + 200);
    for (int t = 0; t < opts.involution_pairs; ++t) {
        const int m = 1 + 2 * static_cast<int>(rng() % ((static_cast<std::uint64_t>(opts.max_set_size) + 1) / 2));
        const GroundSet ground = range_set(m);
        const Permutation s1 = random_involution(ground, rng);
        const Permutation s2 = random_involution(ground, rng);
        const int a = s1.fixed_points().at(0);
        const int b = s2.fixed_points().at(0);

        if (!compose(s2, s1).same_cycle(a, b))
            return {"lemma-keylem", false,
                    "fixed points split across cycles on a set of size " + std::to_string(m)};

        const auto [e1, e2] = extend_involutions(s1, s2, m);
        if (compose(e1, e2).cycle_count() - 1 != compose(s1, s2).cycle_count())
            return {"lemma-4lem1", false,
                    "extension changed the cycle count by more than one (size " +
                        std::to_string(m) + ")"};
    }
    return {"lemma-keylem+4lem1", true,
            std::to_string(opts.involution_pairs) + " involution pairs"};
}

CheckResult check_matrix_factorization(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed + 300);
    int checked = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int t = 0; t < 5; ++t) {
            const SignedPermutation a = draw_random(n, rng);
            const SkewSymmetricInstance inst = skew_symmetric(a);
            const PermutationMatrix P = to_matrix(p_cycle(n));
            const PermutationMatrix S = to_matrix(inst.plane().s());
            const PermutationMatrix R = PermutationMatrix::exchange(2 * n + 1);

            const PermutationMatrix lhs = matrix_product(P, S);
            const PermutationMatrix rhs = matrix_product(matrix_product(P, R), matrix_product(R, S));
            if (lhs != rhs)
                return {"matrix-factorization", false, "PS != (PR)(RS) for " + a.format()};

            const auto [p_invo, s_invo] = involution_factors(a);
            const GroundSet ground = GroundSet::signed_range(n);
            if (from_matrix(matrix_product(P, R), ground) != p_invo)
                return {"matrix-factorization", false, "PR does not give p_invo at n=" + std::to_string(n)};
            if (from_matrix(matrix_product(R, S), ground) != s_invo)
                return {"matrix-factorization", false, "RS does not give s_invo for " + a.format()};
            if (compose(p_invo, s_invo) != inst.pi())
                return {"matrix-factorization", false, "p_invo∘s_invo != p∘s~ for " + a.format()};
            ++checked;
        }
    }
    return {"matrix-factorization", true, std::to_string(checked) + " cases, n <= 8"};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::vector<CheckResult> results;
    results.push_back(corpus_check("bound-equivalence", opts, [](const SignedPermutation& a) {
        const BoundReport r = check_equivalence(a);  // throws on any mismatch
        return r.bound_plane >= 0;
    }));
    results.push_back(corpus_check("same-cycle", opts, [](const SignedPermutation& a) {
        return check_conjecture(a);
    }));
    results.push_back(check_noodd(opts));
    results.push_back(check_keylem_and_extension(opts));
    results.push_back(check_matrix_factorization(opts));
    return results;
}

}  // namespace revperm
