#include "revperm/perm_matrix.hpp"

#include <stdexcept>

namespace revperm {

PermutationMatrix PermutationMatrix::identity(int order) {
    if (order <= 0) throw std::invalid_argument("matrix order must be positive");
    std::vector<int> e(static_cast<size_t>(order) * static_cast<size_t>(order), 0);
    for (int i = 0; i < order; ++i) e[static_cast<size_t>(i) * order + i] = 1;
    return PermutationMatrix(order, std::move(e));
}

PermutationMatrix PermutationMatrix::exchange(int order) {
    if (order <= 0) throw std::invalid_argument("matrix order must be positive");
    std::vector<int> e(static_cast<size_t>(order) * static_cast<size_t>(order), 0);
    for (int i = 0; i < order; ++i) e[static_cast<size_t>(i) * order + (order - 1 - i)] = 1;
    return PermutationMatrix(order, std::move(e));
}

PermutationMatrix PermutationMatrix::from_entries(int order, std::vector<int> entries) {
    if (order <= 0) throw std::invalid_argument("matrix order must be positive");
    if (entries.size() != static_cast<size_t>(order) * static_cast<size_t>(order))
        throw std::invalid_argument("from_entries: entry count does not match order");
    return PermutationMatrix(order, std::move(entries));
}

int PermutationMatrix::at(int row, int col) const {
    if (row < 0 || row >= order_ || col < 0 || col >= order_)
        throw std::invalid_argument("matrix index out of range");
    return entries_[static_cast<size_t>(row) * order_ + col];
}

PermutationMatrix PermutationMatrix::transpose() const {
    std::vector<int> e(entries_.size());
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j)
            e[static_cast<size_t>(j) * order_ + i] = entries_[static_cast<size_t>(i) * order_ + j];
    return PermutationMatrix(order_, std::move(e));
}

bool PermutationMatrix::is_permutation() const {
    for (int i = 0; i < order_; ++i) {
        int row_sum = 0, col_sum = 0;
        for (int j = 0; j < order_; ++j) {
            const int rij = entries_[static_cast<size_t>(i) * order_ + j];
            const int rji = entries_[static_cast<size_t>(j) * order_ + i];
            if ((rij != 0 && rij != 1) || (rji != 0 && rji != 1)) return false;
            row_sum += rij;
            col_sum += rji;
        }
        if (row_sum != 1 || col_sum != 1) return false;
    }
    return true;
}

PermutationMatrix to_matrix(const Permutation& sigma) {
    const int m = sigma.ground().size();
    std::vector<int> e(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
        const int i = sigma.ground().index_of(sigma.apply(sigma.ground().element(j)));
        e[static_cast<size_t>(i) * m + j] = 1;
    }
    return PermutationMatrix::from_entries(m, std::move(e));
}

Permutation from_matrix(const PermutationMatrix& m, const GroundSet& ground) {
    if (m.order() != ground.size())
        throw std::invalid_argument("from_matrix: order does not match ground size");
    if (!m.is_permutation())
        throw std::invalid_argument("from_matrix: not a permutation matrix");
    std::vector<int> images(static_cast<size_t>(m.order()));
    for (int j = 0; j < m.order(); ++j)
        for (int i = 0; i < m.order(); ++i)
            if (m.at(i, j) == 1) images[static_cast<size_t>(j)] = ground.element(i);
    return Permutation::from_images(ground, images);
}

PermutationMatrix matrix_product(const PermutationMatrix& a, const PermutationMatrix& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("matrix_product: dimension mismatch");
    const int m = a.order();
    std::vector<int> e(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            int acc = 0;
            for (int j = 0; j < m; ++j) acc += a.at(i, j) * b.at(j, k);
            e[static_cast<size_t>(i) * m + k] = acc;
        }
    return PermutationMatrix::from_entries(m, std::move(e));
}

}  // namespace revperm
