#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skelcat/errors.hpp"

namespace skelcat {

/// Dense exact linear algebra over a field type F. F must provide +, -, *,
/// construction from int, equality, and a free function inverse(const F&).
/// Used with Rational and CycloNum; everything here is O(n^3) and desk-scale.
template <typename F>
using Matrix = std::vector<std::vector<F>>;

template <typename F>
F determinant(Matrix<F> a) {
    const std::size_t n = a.size();
    F det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == F(0)) ++piv;
        if (piv == n) return F(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = det * F(-1);
        }
        det = det * a[col][col];
        const F inv_p = inverse(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == F(0)) continue;
            const F f = a[r][col] * inv_p;
            for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return det;
}

enum class SolveStatus { unique, inconsistent, underdetermined };

/// Solves A x = b for possibly non-square A (rows x cols). Returns the unique
/// solution when it exists; the status reports why not otherwise.
template <typename F>
struct SolveResult {
    SolveStatus status;
    std::vector<F> solution;  // valid when status == unique
};

template <typename F>
SolveResult<F> solve_linear(Matrix<F> a, std::vector<F> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == F(0)) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        const F inv_p = inverse(a[row][col]);
        for (std::size_t c = col; c < cols; ++c) a[row][c] = a[row][c] * inv_p;
        b[row] = b[row] * inv_p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == F(0)) continue;
            const F f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] - f * a[row][c];
            b[r] = b[r] - f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!(b[r] == F(0))) return {SolveStatus::inconsistent, {}};
    if (pivot_col.size() < cols) return {SolveStatus::underdetermined, {}};
    std::vector<F> x(cols, F(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return {SolveStatus::unique, std::move(x)};
}

template <typename F>
std::size_t matrix_rank(Matrix<F> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == F(0)) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const F inv_p = inverse(a[rank][col]);
        for (std::size_t c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv_p;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col] == F(0)) continue;
            const F f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] - f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace skelcat
