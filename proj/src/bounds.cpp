#include "revperm/bounds.hpp"

#include <stdexcept>

#include <json.hpp>

#include "revperm/fatgraph.hpp"
#include "revperm/plane_permutation.hpp"

namespace revperm {

BreakpointData breakpoint(const SignedPermutation& a) {
    const int n = a.size();
    std::vector<int> b;
    b.reserve(static_cast<size_t>(2 * n + 2));
    b.push_back(0);
    for (int k = 1; k <= n; ++k) {
        b.push_back(-a.at(k));
        b.push_back(a.at(k));
    }
    b.push_back(-(n + 1));

    GroundSet ground = GroundSet::breakpoint_range(n);
    std::vector<std::vector<int>> black, grey;
    for (int i = 0; i <= n; ++i) {
        black.push_back({b[static_cast<size_t>(2 * i)], b[static_cast<size_t>(2 * i + 1)]});
        grey.push_back({i, -(i + 1)});
    }
    Permutation theta1 = Permutation::from_cycles(ground, black);
    Permutation theta2 = Permutation::from_cycles(ground, grey);
    return BreakpointData{std::move(b), std::move(theta1), std::move(theta2)};
}

int bound_plane(const SignedPermutation& a) {
    const int n = a.size();
    const int c = skew_symmetric(a).pi().cycle_count();
    const int numer = 2 * n + 1 - c;
    if (numer % 2 != 0)
        throw std::logic_error("bound_plane: 2n+1 - C(p s~) is odd");
    return numer / 2;
}

int bg_cycle_count(const SignedPermutation& a) {
    const int n = a.size();
    const std::vector<int> b = breakpoint(a).b;
    const GroundSet ground = GroundSet::breakpoint_range(n);

    std::vector<int> position(b.size());
    for (size_t t = 0; t < b.size(); ++t)
        position[static_cast<size_t>(ground.index_of(b[t]))] = static_cast<int>(t);

    auto black_partner = [&](int v) {
        const int t = position[static_cast<size_t>(ground.index_of(v))];
        return b[static_cast<size_t>(t % 2 == 0 ? t + 1 : t - 1)];
    };
    auto grey_partner = [&](int v) { return v >= 0 ? -(v + 1) : -v - 1; };

    std::vector<char> seen(b.size(), 0);
    int count = 0;
    for (int start : b) {
        if (seen[static_cast<size_t>(ground.index_of(start))]) continue;
        ++count;
        int x = start;
        do {
            seen[static_cast<size_t>(ground.index_of(x))] = 1;
            const int y = black_partner(x);
            seen[static_cast<size_t>(ground.index_of(y))] = 1;
            x = grey_partner(y);
        } while (x != start);
    }
    return count;
}

int bound_bg(const SignedPermutation& a) {
    const int n = a.size();
    const int via_walk = n + 1 - bg_cycle_count(a);

    const BreakpointData bp = breakpoint(a);
    const int c_theta = compose(bp.theta1, bp.theta2).cycle_count();
    const int numer = 2 * n + 2 - c_theta;
    if (numer % 2 != 0)
        throw std::logic_error("bound_bg: 2n+2 - C(theta1 theta2) is odd");
    const int via_theta = numer / 2;

    if (via_walk != via_theta)
        throw std::logic_error("bound_bg: cycle walk and theta product disagree");
    return via_walk;
}

std::pair<Permutation, Permutation> involution_factors(const SignedPermutation& a) {
    const int n = a.size();
    GroundSet ground = GroundSet::signed_range(n);

    std::vector<std::vector<int>> p_pairs;  // (-n, n-1)(-n+1, n-2)...(-1, 0), n fixed
    for (int k = 1; k <= n; ++k) p_pairs.push_back({-k, k - 1});
    Permutation p_invo = Permutation::from_cycles(ground, p_pairs);

    std::vector<std::vector<int>> s_pairs;  // (0, -s1)(s1, -s2)...(s_{n-1}, -s_n), s_n fixed
    s_pairs.push_back({0, -a.at(1)});
    for (int k = 1; k < n; ++k) s_pairs.push_back({a.at(k), -a.at(k + 1)});
    Permutation s_invo = Permutation::from_cycles(ground, s_pairs);

    return {std::move(p_invo), std::move(s_invo)};
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["c_plane"] = c_plane;
    j["c_theta"] = c_theta;
    j["c_bg"] = c_bg;
    j["bound"] = bound_plane;
    return j.dump();
}

BoundReport check_equivalence(const SignedPermutation& a) {
    const int n = a.size();
    BoundReport r{};
    r.n = n;
    r.c_plane = skew_symmetric(a).pi().cycle_count();

    const BreakpointData bp = breakpoint(a);
    r.c_theta = compose(bp.theta1, bp.theta2).cycle_count();
    r.c_bg = bg_cycle_count(a);

    r.bound_plane = bound_plane(a);
    r.bound_bg = bound_bg(a);
    r.bound_genus = genus(fatgraph_from_signed(a)).genus;

    if (r.c_plane != r.c_theta - 1)
        throw std::logic_error("equivalence: C(p s~) != C(theta1 theta2) - 1");
    if (r.c_theta != 2 * r.c_bg)
        throw std::logic_error("equivalence: C(theta1 theta2) != 2 C_BG");
    if (r.bound_plane != r.bound_bg || r.bound_plane != r.bound_genus)
        throw std::logic_error("equivalence: bounds disagree");
    return r;
}

bool check_conjecture(const SignedPermutation& a) {
    const SkewSymmetricInstance inst = skew_symmetric(a);
    return inst.pi().same_cycle(inst.n(), a.at(a.size()));
}

bool check_conjecture(const Permutation& s_tilde) {
    const GroundSet& g = s_tilde.ground();
    const int m = g.size();
    if (m % 2 != 1 || m < 3)
        throw std::invalid_argument("conjecture: ground set must be {-n..n}, n >= 1");
    const int n = (m - 1) / 2;
    if (g != GroundSet::signed_range(n))
        throw std::invalid_argument("conjecture: ground set must be {-n..n}");
    if (s_tilde.cycle_count() != 1)
        throw std::invalid_argument("conjecture: input must be a single long cycle");

    // row from 0 must satisfy row[k] = -row[2n+1-k]
    std::vector<int> row;
    int x = 0;
    do {
        row.push_back(x);
        x = s_tilde.apply(x);
    } while (x != 0);
    for (int k = 1; k <= 2 * n; ++k)
        if (row[static_cast<size_t>(k)] != -row[static_cast<size_t>(2 * n + 1 - k)])
            throw std::invalid_argument("conjecture: cycle is not skew-symmetric");

    const Permutation pi = compose(p_cycle(n), s_tilde);
    return pi.same_cycle(n, row[static_cast<size_t>(n)]);
}

std::pair<Permutation, Permutation> extend_involutions(const Permutation& sigma1,
                                                       const Permutation& sigma2,
                                                       int fresh_element) {
    if (sigma1.ground() != sigma2.ground())
        throw std::invalid_argument("extend_involutions: ground-set mismatch");
    if (!sigma1.is_involution() || !sigma2.is_involution())
        throw std::invalid_argument("extend_involutions: inputs must be involutions");
    const auto fp1 = sigma1.fixed_points();
    const auto fp2 = sigma2.fixed_points();
    if (fp1.size() != 1 || fp2.size() != 1)
        throw std::invalid_argument("extend_involutions: each input needs exactly one fixed point");
    if (sigma1.ground().contains(fresh_element))
        throw std::invalid_argument("extend_involutions: fresh element already in ground set");

    std::vector<int> elems = sigma1.ground().elements();
    elems.push_back(fresh_element);
    GroundSet extended(std::move(elems));

    auto extend = [&](const Permutation& sigma, int fp) {
        std::vector<int> images;
        images.reserve(static_cast<size_t>(extended.size()));
        for (int v : extended.elements()) {
            if (v == fresh_element)
                images.push_back(fp);
            else if (v == fp)
                images.push_back(fresh_element);
            else
                images.push_back(sigma.apply(v));
        }
        return Permutation::from_images(extended, images);
    };
    return {extend(sigma1, fp1[0]), extend(sigma2, fp2[0])};
}

}  // namespace revperm
