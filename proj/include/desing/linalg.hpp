#ifndef DESING_LINALG_HPP
#define DESING_LINALG_HPP

#include "desing/rat.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace desing {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form over an exact field F (Rat, RatFun).
/// Zero rows are dropped; returns the pivot column of every kept row.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && m[pick][col].is_zero())
            ++pick;
        if (pick == m.size())
            continue;
        std::swap(m[row], m[pick]);
        F inv = m[row][col].inverse();
        for (auto& x : m[row])
            x = x * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            F f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c)
                m[r][c] = m[r][c] - f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m, std::size_t cols) {
    return rref(m, cols).size();
}

/// Unique solution of the square system a x = b, or nullopt when a is
/// singular.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    const std::size_t n = a.size();
    Matrix<F> aug = a;
    for (std::size_t i = 0; i < n; ++i)
        aug[i].push_back(b[i]);
    auto pivots = rref(aug, n);
    if (pivots.size() != n)
        return std::nullopt;
    std::vector<F> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug[i][n];
    return x;
}

/// Scales a rational row to coprime integers whose first non-zero entry is
/// positive.
std::vector<Integer> integer_row(const std::vector<Rat>& row);

} // namespace desing

#endif
