#include "revperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace revperm {

GroundSet::GroundSet(std::vector<int> elements) : elems_(std::move(elements)) {
    if (elems_.empty())
        throw std::invalid_argument("ground set must be nonempty");
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
        throw std::invalid_argument("ground set elements must be distinct");
    min_ = elems_.front();
    pos_.assign(static_cast<size_t>(elems_.back() - min_) + 1, -1);
    for (int i = 0; i < size(); ++i)
        pos_[static_cast<size_t>(elems_[i] - min_)] = i;
}

GroundSet GroundSet::signed_range(int n) {
    if (n < 0) throw std::invalid_argument("signed_range: n must be >= 0");
    std::vector<int> e(2 * n + 1);
    std::iota(e.begin(), e.end(), -n);
    return GroundSet(std::move(e));
}

GroundSet GroundSet::breakpoint_range(int n) {
    if (n < 0) throw std::invalid_argument("breakpoint_range: n must be >= 0");
    std::vector<int> e(2 * n + 2);
    std::iota(e.begin(), e.end(), -(n + 1));
    return GroundSet(std::move(e));
}

bool GroundSet::contains(int x) const {
    if (x < min_ || x - min_ >= static_cast<int>(pos_.size())) return false;
    return pos_[static_cast<size_t>(x - min_)] >= 0;
}

int GroundSet::index_of(int x) const {
    if (!contains(x))
        throw std::invalid_argument("element " + std::to_string(x) +
                                    " not in ground set");
    return pos_[static_cast<size_t>(x - min_)];
}

Permutation Permutation::identity(GroundSet ground) {
    std::vector<int> img(static_cast<size_t>(ground.size()));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(ground), std::move(img));
}

Permutation Permutation::from_images(GroundSet ground, const std::vector<int>& images) {
    const int m = ground.size();
    if (static_cast<int>(images.size()) != m)
        throw std::invalid_argument("from_images: image count does not match ground size");
    std::vector<int> img(static_cast<size_t>(m));
    std::vector<char> hit(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        const int idx = ground.index_of(images[static_cast<size_t>(i)]);
        if (hit[static_cast<size_t>(idx)])
            throw std::invalid_argument("from_images: not a bijection (repeated image)");
        hit[static_cast<size_t>(idx)] = 1;
        img[static_cast<size_t>(i)] = idx;
    }
    return Permutation(std::move(ground), std::move(img));
}

Permutation Permutation::from_cycles(GroundSet ground,
                                     const std::vector<std::vector<int>>& cycles) {
    const int m = ground.size();
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (const auto& cycle : cycles) {
        if (cycle.empty())
            throw std::invalid_argument("from_cycles: empty cycle");
        for (size_t k = 0; k < cycle.size(); ++k) {
            const int from = ground.index_of(cycle[k]);
            const int to = ground.index_of(cycle[(k + 1) % cycle.size()]);
            if (seen[static_cast<size_t>(from)])
                throw std::invalid_argument("from_cycles: element appears twice");
            seen[static_cast<size_t>(from)] = 1;
            img[static_cast<size_t>(from)] = to;
        }
    }
    return Permutation(std::move(ground), std::move(img));
}

Permutation Permutation::from_cycle_row(GroundSet ground, const std::vector<int>& row) {
    if (static_cast<int>(row.size()) != ground.size())
        throw std::invalid_argument("from_cycle_row: row must cover the ground set");
    return from_cycles(std::move(ground), {row});
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        inv[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(ground_, std::move(inv));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

bool Permutation::is_involution() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[static_cast<size_t>(img_[i])] != static_cast<int>(i)) return false;
    return true;
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] == static_cast<int>(i)) out.push_back(ground_.element(static_cast<int>(i)));
    return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int m = ground_.size();
    std::vector<char> seen(static_cast<size_t>(m), 0);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < m; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int i = start; !seen[static_cast<size_t>(i)]; i = img_[static_cast<size_t>(i)]) {
            seen[static_cast<size_t>(i)] = 1;
            cycle.push_back(ground_.element(i));
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

int Permutation::cycle_count() const {
    const int m = ground_.size();
    std::vector<char> seen(static_cast<size_t>(m), 0);
    int count = 0;
    for (int start = 0; start < m; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        ++count;
        for (int i = start; !seen[static_cast<size_t>(i)]; i = img_[static_cast<size_t>(i)])
            seen[static_cast<size_t>(i)] = 1;
    }
    return count;
}

bool Permutation::same_cycle(int x, int y) const {
    const int xi = ground_.index_of(x);
    const int yi = ground_.index_of(y);
    int i = xi;
    do {
        if (i == yi) return true;
        i = img_[static_cast<size_t>(i)];
    } while (i != xi);
    return false;
}

Permutation Permutation::restricted(const std::vector<int>& subset) const {
    GroundSet sub(subset);
    std::vector<int> images;
    images.reserve(subset.size());
    for (int x : sub.elements()) {
        const int y = apply(x);
        if (!sub.contains(y))
            throw std::invalid_argument("restricted: subset not closed under the map");
        images.push_back(y);
    }
    return from_images(std::move(sub), images);
}

std::string Permutation::cycle_string() const {
    std::string out;
    for (const auto& cycle : cycles()) {
        out += '(';
        for (size_t k = 0; k < cycle.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(cycle[k]);
        }
        out += ')';
    }
    return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.ground() != tau.ground())
        throw std::invalid_argument("compose: ground-set mismatch");
    const int m = sigma.ground().size();
    std::vector<int> images(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        images[static_cast<size_t>(i)] = sigma.apply(tau.apply(sigma.ground().element(i)));
    return Permutation::from_images(sigma.ground(), images);
}

}  // namespace revperm
