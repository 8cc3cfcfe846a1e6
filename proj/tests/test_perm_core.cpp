#include <doctest.h>

#include <random>
#include <stdexcept>

#include "revperm/perm_matrix.hpp"
#include "revperm/permutation.hpp"
#include "revperm/signed_permutation.hpp"
#include "test_util.hpp"

using namespace revperm;
using testutil::canon_cycles;
using testutil::e_natural_row;
using testutil::p_row;
using testutil::random_involution;
using testutil::random_permutation;
using testutil::range_set;
using testutil::s_tilde_row;

// the running example throughout: a = -5 1 -3 2 4
static SignedPermutation example5() { return SignedPermutation::parse("-5 1 -3 2 4"); }

TEST_CASE("ground set ordering and lookup") {
    GroundSet g = GroundSet::signed_range(2);
    CHECK(g.size() == 5);
    CHECK(g.element(0) == -2);
    CHECK(g.element(4) == 2);
    CHECK(g.index_of(0) == 2);
    CHECK(g.contains(-2));
    CHECK(!g.contains(3));
    CHECK_THROWS_AS(g.index_of(7), std::invalid_argument);
    CHECK_THROWS_AS(GroundSet({1, 1, 2}), std::invalid_argument);
    CHECK(GroundSet({3, 1, 2}) == GroundSet({1, 2, 3}));
}

TEST_CASE("compose applies the right factor first") {
    GroundSet g = GroundSet::signed_range(1);
    Permutation id = Permutation::identity(g);
    Permutation p1 = Permutation::from_cycles(g, {{0, -1, 1}});

    CHECK(compose(id, p1) == p1);
    CHECK(compose(p1, id) == p1);
    // two copies of the 3-cycle (0,-1,1) compose to (0,1,-1)
    CHECK(compose(p1, p1) == Permutation::from_cycles(g, {{0, 1, -1}}));
}

TEST_CASE("compose reproduces the full n=5 mapping") {
    const SignedPermutation a = example5();
    GroundSet g = GroundSet::signed_range(5);
    Permutation p = Permutation::from_cycle_row(g, p_row(5));
    Permutation s = Permutation::from_cycle_row(g, s_tilde_row(a));
    Permutation pi = compose(p, s);

    CHECK(pi(0) == 5);
    CHECK(pi(-5) == 0);
    CHECK(pi(1) == -4);
    CHECK(pi(-3) == 1);
    CHECK(pi(2) == 3);
    CHECK(pi(4) == -5);
    CHECK(pi(-4) == -3);
    CHECK(pi(-2) == 2);
    CHECK(pi(3) == -2);
    CHECK(pi(-1) == 4);
    CHECK(pi(5) == -1);
}

TEST_CASE("compose rejects mismatched ground sets") {
    Permutation a = Permutation::identity(GroundSet::signed_range(2));
    Permutation b = Permutation::identity(GroundSet::signed_range(3));
    CHECK_THROWS_AS(compose(a, b), std::invalid_argument);
}

TEST_CASE("cycle decomposition counts fixed points as 1-cycles") {
    for (int n = 1; n <= 4; ++n) {
        Permutation id = Permutation::identity(GroundSet::signed_range(n));
        CHECK(id.cycle_count() == 2 * n + 1);
        CHECK(id.cycles().size() == static_cast<size_t>(2 * n + 1));
    }
}

TEST_CASE("p composed with the natural long cycle has 2n+1 cycles") {
    for (int n = 1; n <= 8; ++n) {
        GroundSet g = GroundSet::signed_range(n);
        Permutation p = Permutation::from_cycle_row(g, p_row(n));
        Permutation e = Permutation::from_cycle_row(g, e_natural_row(n));
        CHECK(compose(p, e).cycle_count() == 2 * n + 1);
    }
}

TEST_CASE("cycles of the n=5 example") {
    const SignedPermutation a = example5();
    GroundSet g = GroundSet::signed_range(5);
    Permutation pi = compose(Permutation::from_cycle_row(g, p_row(5)),
                             Permutation::from_cycle_row(g, s_tilde_row(a)));
    CHECK(pi.cycle_count() == 3);
    CHECK(pi.cycles() == canon_cycles({{0, 5, -1, 4, -5}, {1, -4, -3}, {2, 3, -2}}));
}

TEST_CASE("inverse, involutions, fixed points") {
    GroundSet g3 = GroundSet::signed_range(3);
    Permutation id = Permutation::identity(g3);
    CHECK(id.is_involution());
    CHECK(id.fixed_points() == g3.elements());

    Permutation p_invo = Permutation::from_cycles(g3, {{-3, 2}, {-2, 1}, {-1, 0}});
    CHECK(p_invo.is_involution());
    CHECK(p_invo.fixed_points() == std::vector<int>{3});

    GroundSet g1 = GroundSet::signed_range(1);
    Permutation c = Permutation::from_cycles(g1, {{0, 1, -1}});
    CHECK(c.inverse() == Permutation::from_cycles(g1, {{0, -1, 1}}));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        Permutation s = random_permutation(g3, rng);
        CHECK(s.inverse().inverse() == s);
        CHECK(s.cycle_count() == s.inverse().cycle_count());
        CHECK(compose(s.inverse(), s).is_identity());
    }
}

TEST_CASE("same_cycle") {
    GroundSet g = GroundSet::signed_range(2);
    Permutation s = Permutation::from_cycles(g, {{0, 1, -1}});
    CHECK(s.same_cycle(0, 0));
    CHECK(s.same_cycle(0, -1));
    CHECK(!s.same_cycle(0, 2));
    CHECK_THROWS_AS(s.same_cycle(0, 9), std::invalid_argument);

    const SignedPermutation a = example5();
    GroundSet g5 = GroundSet::signed_range(5);
    Permutation pi = compose(Permutation::from_cycle_row(g5, p_row(5)),
                             Permutation::from_cycle_row(g5, s_tilde_row(a)));
    CHECK(pi.same_cycle(5, 4));
}

TEST_CASE("from_images rejects non-bijections") {
    GroundSet g = GroundSet::signed_range(1);
    CHECK_THROWS_AS(Permutation::from_images(g, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images(g, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(g, {{0, 1}, {1, -1}}), std::invalid_argument);
}

TEST_CASE("restricted requires a closed subset") {
    GroundSet g = GroundSet::signed_range(2);
    Permutation s = Permutation::from_cycles(g, {{1, 2}, {-1, -2}});
    Permutation r = s.restricted({1, 2});
    CHECK(r.cycle_count() == 1);
    CHECK_THROWS_AS(s.restricted({0, 1}), std::invalid_argument);
}

TEST_CASE("matrix of the identity is the identity matrix") {
    for (int n = 1; n <= 3; ++n) {
        Permutation id = Permutation::identity(GroundSet::signed_range(n));
        CHECK(to_matrix(id) == PermutationMatrix::identity(2 * n + 1));
    }
}

TEST_CASE("matrix product corresponds to composition, transpose to inverse") {
    std::mt19937_64 rng(7);
    for (int size : {3, 8, 21}) {
        GroundSet g = range_set(size);
        for (int t = 0; t < 20; ++t) {
            Permutation s = random_permutation(g, rng);
            Permutation u = random_permutation(g, rng);
            CHECK(to_matrix(compose(s, u)) == matrix_product(to_matrix(s), to_matrix(u)));
            CHECK(to_matrix(s.inverse()) == to_matrix(s).transpose());
            CHECK(from_matrix(to_matrix(s), g) == s);
        }
    }
}

TEST_CASE("PR is the canonical involution with fixed point n") {
    const int n = 3;
    GroundSet g = GroundSet::signed_range(n);
    PermutationMatrix P = to_matrix(Permutation::from_cycle_row(g, p_row(n)));
    PermutationMatrix R = PermutationMatrix::exchange(2 * n + 1);
    Permutation pr = from_matrix(matrix_product(P, R), g);
    CHECK(pr == Permutation::from_cycles(g, {{-3, 2}, {-2, 1}, {-1, 0}}));
    CHECK(pr.fixed_points() == std::vector<int>{3});
}

TEST_CASE("RS is the canonical involution with fixed point s_n") {
    const SignedPermutation a = example5();
    GroundSet g = GroundSet::signed_range(5);
    PermutationMatrix S = to_matrix(Permutation::from_cycle_row(g, s_tilde_row(a)));
    PermutationMatrix R = PermutationMatrix::exchange(11);
    Permutation rs = from_matrix(matrix_product(R, S), g);
    CHECK(rs == Permutation::from_cycles(
                    g, {{0, 5}, {-5, -1}, {1, 3}, {-3, -2}, {2, -4}}));
    CHECK(rs.fixed_points() == std::vector<int>{4});

    std::mt19937_64 rng(5);
    for (int n = 1; n <= 8; ++n) {
        const SignedPermutation b = draw_random(n, rng);
        GroundSet gn = GroundSet::signed_range(n);
        PermutationMatrix Sn = to_matrix(Permutation::from_cycle_row(gn, s_tilde_row(b)));
        Permutation inv = from_matrix(
            matrix_product(PermutationMatrix::exchange(2 * n + 1), Sn), gn);
        CHECK(inv.is_involution());
        CHECK(inv.fixed_points() == std::vector<int>{b.at(n)});
    }
}

TEST_CASE("factorization PS = (PR)(RS) for n up to 8") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 8; ++n) {
        GroundSet g = GroundSet::signed_range(n);
        PermutationMatrix P = to_matrix(Permutation::from_cycle_row(g, p_row(n)));
        PermutationMatrix R = PermutationMatrix::exchange(2 * n + 1);
        for (int t = 0; t < 5; ++t) {
            const SignedPermutation a = draw_random(n, rng);
            PermutationMatrix S = to_matrix(Permutation::from_cycle_row(g, s_tilde_row(a)));
            CHECK(matrix_product(P, S) ==
                  matrix_product(matrix_product(P, R), matrix_product(R, S)));
        }
    }
}

TEST_CASE("from_matrix rejects a non-permutation matrix") {
    PermutationMatrix bad = PermutationMatrix::from_entries(2, {1, 1, 0, 0});
    CHECK(!bad.is_permutation());
    CHECK_THROWS_AS(from_matrix(bad, range_set(2)), std::invalid_argument);
    CHECK_THROWS_AS(matrix_product(PermutationMatrix::identity(2),
                                   PermutationMatrix::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("compose is associative") {
    std::mt19937_64 rng(17);
    GroundSet g = range_set(9);
    for (int t = 0; t < 30; ++t) {
        Permutation a = random_permutation(g, rng);
        Permutation b = random_permutation(g, rng);
        Permutation c = random_permutation(g, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("product of fixed-point-free involutions has no odd-order return") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 500; ++t) {
        const int m = 2 * (1 + static_cast<int>(rng() % 12));  // 2..24
        GroundSet g = range_set(m);
        Permutation s1 = random_involution(g, rng);
        Permutation s2 = random_involution(g, rng);
        Permutation step = compose(s2, s1);
        for (int x : g.elements()) {
            int y = x;
            for (int k = 1; k <= m; ++k) {
                y = step(y);
                CHECK(s1(y) != x);
            }
        }
    }
}

TEST_CASE("unique fixed points land in one cycle of the product") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 500; ++t) {
        const int m = 1 + 2 * static_cast<int>(rng() % 13);  // odd, 1..25
        GroundSet g = range_set(m);
        Permutation s1 = random_involution(g, rng);
        Permutation s2 = random_involution(g, rng);
        const int a = s1.fixed_points().at(0);
        const int b = s2.fixed_points().at(0);
        CHECK(compose(s2, s1).same_cycle(a, b));
    }
}

TEST_CASE("pairing the fixed points with a fresh element adds exactly one cycle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 500; ++t) {
        const int m = 1 + 2 * static_cast<int>(rng() % 13);
        GroundSet g = range_set(m);
        Permutation s1 = random_involution(g, rng);
        Permutation s2 = random_involution(g, rng);
        const int a = s1.fixed_points().at(0);
        const int b = s2.fixed_points().at(0);

        // extend by hand: fresh element m pairs with each fixed point
        std::vector<int> elems = g.elements();
        elems.push_back(m);
        GroundSet gx(std::move(elems));
        auto extend = [&](const Permutation& s, int fp) {
            std::vector<int> images;
            for (int v : gx.elements()) {
                if (v == m)
                    images.push_back(fp);
                else if (v == fp)
                    images.push_back(m);
                else
                    images.push_back(s(v));
            }
            return Permutation::from_images(gx, images);
        };
        Permutation e1 = extend(s1, a);
        Permutation e2 = extend(s2, b);
        CHECK(e1.is_involution());
        CHECK(e1.fixed_points().empty());
        CHECK(compose(e1, e2).cycle_count() - 1 == compose(s1, s2).cycle_count());
    }
}
