#pragma once

#include <optional>
#include <vector>

#include "linesum/scalar.hpp"

namespace linesum {

// Dense Gaussian elimination over a field type (Rational for exact work).
template <class T>
struct LinearSystem {
    std::vector<std::vector<T>> A;  // rows x cols
    std::vector<T> b;
};

template <class T>
long matrix_rank(std::vector<std::vector<T>> A) {
    if (A.empty()) return 0;
    std::size_t rows = A.size(), cols = A[0].size();
    long rank = 0;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t piv = prow;
        while (piv < rows && A[piv][c] == T(0)) ++piv;
        if (piv == rows) continue;
        std::swap(A[prow], A[piv]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow || A[r][c] == T(0)) continue;
            T f = A[r][c] / A[prow][c];
            for (std::size_t cc = c; cc < cols; ++cc) A[r][cc] -= f * A[prow][cc];
        }
        ++prow;
        ++rank;
    }
    return rank;
}

// Particular solution with free variables set to zero, or nullopt if
// the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve_particular(std::vector<std::vector<T>> A,
                                               std::vector<T> b) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    std::vector<long> pivot_col;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t piv = prow;
        while (piv < rows && A[piv][c] == T(0)) ++piv;
        if (piv == rows) continue;
        std::swap(A[prow], A[piv]);
        std::swap(b[prow], b[piv]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow || A[r][c] == T(0)) continue;
            T f = A[r][c] / A[prow][c];
            for (std::size_t cc = c; cc < cols; ++cc) A[r][cc] -= f * A[prow][cc];
            b[r] -= f * b[prow];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++prow;
    }
    for (std::size_t r = prow; r < rows; ++r)
        if (b[r] != T(0)) return std::nullopt;
    std::vector<T> x(cols, T(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        x[pivot_col[r]] = b[r] / A[r][pivot_col[r]];
    return x;
}

}  // namespace linesum
