#include "revperm/plane_permutation.hpp"

#include <stdexcept>

namespace revperm {

PlanePermutation::PlanePermutation(Permutation s, Permutation pi, int anchor)
    : s_(std::move(s)), pi_(std::move(pi)), anchor_(anchor) {
    if (s_.ground() != pi_.ground())
        throw std::invalid_argument("plane permutation: s and pi must share a ground set");
    if (s_.cycle_count() != 1)
        throw std::invalid_argument("plane permutation: s must be a single cycle");
    if (!s_.ground().contains(anchor_))
        throw std::invalid_argument("plane permutation: anchor not in ground set");
}

std::vector<int> PlanePermutation::s_row() const {
    std::vector<int> row;
    row.reserve(static_cast<size_t>(s_.ground().size()));
    int x = anchor_;
    do {
        row.push_back(x);
        x = s_.apply(x);
    } while (x != anchor_);
    return row;
}

std::vector<int> PlanePermutation::pi_row() const {
    std::vector<int> row = s_row();
    for (int& x : row) x = pi_.apply(x);
    return row;
}

std::string PlanePermutation::two_row_render() const {
    auto join = [](const std::vector<int>& row) {
        std::string out;
        for (size_t k = 0; k < row.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(row[k]);
        }
        return out;
    };
    return "s : " + join(s_row()) + "\npi: " + join(pi_row()) + "\n";
}

BlockInterchange::BlockInterchange(int i_, int j_, int k_, int l_)
    : i(i_), j(j_), k(k_), l(l_) {
    if (!(1 <= i && i <= j && j < k && k <= l))
        throw std::invalid_argument("block interchange requires 1 <= i <= j < k <= l");
}

PlanePermutation block_interchange(const PlanePermutation& pp, const BlockInterchange& h) {
    std::vector<int> row = pp.s_row();
    const int m = static_cast<int>(row.size());
    if (h.l >= m)
        throw std::invalid_argument("block interchange out of range");
    std::vector<int> swapped;
    swapped.reserve(row.size());
    auto append = [&](int from, int to) {  // inclusive
        for (int t = from; t <= to; ++t) swapped.push_back(row[static_cast<size_t>(t)]);
    };
    append(0, h.i - 1);
    append(h.k, h.l);
    append(h.j + 1, h.k - 1);
    append(h.i, h.j);
    append(h.l + 1, m - 1);

    Permutation s_h = Permutation::from_cycle_row(pp.s().ground(), swapped);
    Permutation pi_h = compose(pp.diagonal().inverse(), s_h);
    return PlanePermutation(std::move(s_h), std::move(pi_h), pp.anchor());
}

Permutation p_cycle(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<int> row;
    row.reserve(static_cast<size_t>(2 * n + 1));
    for (int v = 0; v >= -n; --v) row.push_back(v);
    for (int v = n; v >= 1; --v) row.push_back(v);
    return Permutation::from_cycle_row(GroundSet::signed_range(n), row);
}

Permutation e_natural(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<int> row;
    row.reserve(static_cast<size_t>(2 * n + 1));
    for (int v = 0; v <= n; ++v) row.push_back(v);
    for (int v = -n; v <= -1; ++v) row.push_back(v);
    return Permutation::from_cycle_row(GroundSet::signed_range(n), row);
}

SkewSymmetricInstance::SkewSymmetricInstance(SignedPermutation a)
    : a_(std::move(a)),
      plane_([&] {
          const int n = a_.size();
          std::vector<int> row;
          row.reserve(static_cast<size_t>(2 * n + 1));
          row.push_back(0);
          for (int k = 1; k <= n; ++k) row.push_back(a_.at(k));
          for (int k = n; k >= 1; --k) row.push_back(-a_.at(k));
          Permutation s_tilde = Permutation::from_cycle_row(GroundSet::signed_range(n), row);
          Permutation pi = compose(p_cycle(n), s_tilde);
          return PlanePermutation(std::move(s_tilde), std::move(pi), 0);
      }()) {}

SkewSymmetricInstance skew_symmetric(const SignedPermutation& a) {
    return SkewSymmetricInstance(a);
}

BlockInterchange reversal_h(int i, int j, int n) {
    if (!(1 <= i && i <= j && j <= n))
        throw std::invalid_argument("reversal requires 1 <= i <= j <= n");
    return BlockInterchange(i, j, 2 * n + 1 - j, 2 * n + 1 - i);
}

SkewSymmetricInstance apply_reversal(const SkewSymmetricInstance& inst, int i, int j) {
    if (!(1 <= i && i <= j && j <= inst.n()))
        throw std::invalid_argument("reversal requires 1 <= i <= j <= n");
    return SkewSymmetricInstance(reverse(inst.a(), ReversalStep(i, j)));
}

std::optional<ReversalStep> find_2_reversal(const SkewSymmetricInstance& inst) {
    const int base = inst.pi().cycle_count();
    for (int i = 1; i <= inst.n(); ++i)
        for (int j = i; j <= inst.n(); ++j)
            if (apply_reversal(inst, i, j).pi().cycle_count() - base == 2)
                return ReversalStep(i, j);
    return std::nullopt;
}

}  // namespace revperm
