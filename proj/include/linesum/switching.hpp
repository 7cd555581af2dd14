#pragma once

#include <map>
#include <utility>
#include <vector>

#include "linesum/grid.hpp"
#include "linesum/linalg.hpp"
#include "linesum/poly.hpp"

namespace linesum {

// Coefficient grid of a polynomial, clipped to m x n.
inline Grid<long> polynomial_grid(const BivariatePolynomial& p, long m,
                                  long n) {
    Grid<long> g(m, n, 0);
    for (const auto& [k, c] : p.coefficients()) {
        if (!g.in_range(k.first, k.second))
            throw IndexOutOfRange("polynomial support exceeds grid");
        g(k.first, k.second) = c;
    }
    return g;
}

// Lexicographically first nonzero position of a polynomial's support.
inline std::pair<long, long> polynomial_corner(const BivariatePolynomial& p) {
    return p.coefficients().begin()->first;  // map keys are already lex
}

// The switching element m_{(u,v,S)}: coefficients of x^u y^v F_S.
inline Grid<long> switching_element(long u, long v, const DirectionSet& S,
                                    long m, long n) {
    validate_direction_set(S, m, n);
    if (u < 0 || u >= m - S.M() || v < 0 || v >= n - S.N())
        throw IndexOutOfRange("switching element offset (" + std::to_string(u) +
                              "," + std::to_string(v) + ") out of range");
    auto shifted = BivariatePolynomial::monomial(u, v, 1) *
                   switching_polynomial(S);
    return polynomial_grid(shifted, m, n);
}

// The (m-M)(n-N) switching elements in lexicographic (u,v) order, with
// their bottom-left corners and the weight R(S).
struct SwitchingBasis {
    long m = 0, n = 0;
    DirectionSet S;
    BivariatePolynomial FS;
    std::vector<std::pair<long, long>> offsets;  // (u,v), u major
    std::vector<Grid<long>> elements;
    std::vector<std::pair<long, long>> corners;  // lex sorted, one per element
    long weight = 0;

    long dim() const { return static_cast<long>(elements.size()); }

    static SwitchingBasis build(const DirectionSet& S, long m, long n) {
        validate_direction_set(S, m, n);
        SwitchingBasis b;
        b.m = m;
        b.n = n;
        b.S = S;
        b.FS = switching_polynomial(S);
        b.weight = b.FS.weight();
        auto base_corner = polynomial_corner(b.FS);
        for (long u = 0; u < m - S.M(); ++u)
            for (long v = 0; v < n - S.N(); ++v) {
                b.offsets.emplace_back(u, v);
                b.elements.push_back(switching_element(u, v, S, m, n));
                b.corners.emplace_back(base_corner.first + u,
                                       base_corner.second + v);
            }
        return b;
    }
};

inline std::vector<std::pair<long, long>> bottom_left_corners(
    const DirectionSet& S, long m, long n) {
    return SwitchingBasis::build(S, m, n).corners;
}

// Coefficients c_{uv} of g in the switching basis, in the basis's
// element order.
template <class T>
struct Decomposition {
    std::vector<std::pair<long, long>> offsets;
    std::vector<T> coefficients;
};

namespace detail {

template <class T>
bool has_zero_line_sums(const Grid<T>& g, const DirectionSet& S, double tol) {
    auto table = compute_line_sums(g, S);
    for (const auto& [d, row] : table.sums)
        for (const auto& [t, v] : row) {
            if constexpr (is_exact_v<T>) {
                if (v != T(0)) return false;
            } else {
                if (std::abs(to_double(v)) > tol) return false;
            }
        }
    return true;
}

// Corner peeling: corners are lex-increasing with the element order and
// each element vanishes at all earlier corners, so the system is
// triangular with +-1 pivots.
template <class T>
Decomposition<T> peel(Grid<T> residual, const SwitchingBasis& basis) {
    Decomposition<T> dec;
    dec.offsets = basis.offsets;
    dec.coefficients.reserve(basis.elements.size());
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        auto [ci, cj] = basis.corners[k];
        long pivot = basis.elements[k](ci, cj);
        T c = residual(ci, cj) / T(pivot);
        dec.coefficients.push_back(c);
        if (c != T(0)) {
            const auto& e = basis.elements[k];
            for (long j = 0; j < basis.n; ++j)
                for (long i = 0; i < basis.m; ++i)
                    if (e(i, j) != 0) residual(i, j) -= c * T(e(i, j));
        }
    }
    for (long j = 0; j < basis.n; ++j)
        for (long i = 0; i < basis.m; ++i) {
            if constexpr (is_exact_v<T>) {
                if (residual(i, j) != T(0))
                    throw DecompositionResidual(
                        "nonzero residual after corner peeling");
            } else {
                if (std::abs(to_double(residual(i, j))) > 1e-6)
                    throw DecompositionResidual(
                        "nonzero residual after corner peeling");
            }
        }
    return dec;
}

}  // namespace detail

template <class T>
Decomposition<T> decompose(const Grid<T>& g, const SwitchingBasis& basis,
                           double tol = 1e-8) {
    if (!detail::has_zero_line_sums(g, basis.S, tol))
        throw NotZeroSum("grid does not have zero line sums along S");
    return detail::peel(g, basis);
}

template <class T>
Decomposition<T> decompose(const Grid<T>& g, const DirectionSet& S) {
    return decompose(g, SwitchingBasis::build(S, g.m(), g.n()));
}

template <class T>
Grid<T> recompose(const Decomposition<T>& dec, const SwitchingBasis& basis) {
    Grid<T> g(basis.m, basis.n, T(0));
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        const T& c = dec.coefficients[k];
        if (c == T(0)) continue;
        const auto& e = basis.elements[k];
        for (long j = 0; j < basis.n; ++j)
            for (long i = 0; i < basis.m; ++i)
                if (e(i, j) != 0) g(i, j) += c * T(e(i, j));
    }
    return g;
}

namespace detail {

// Dense row of the line-sum operator for one line.
template <class T>
std::vector<std::vector<T>> line_matrix(const std::vector<Line>& lines, long m,
                                        long n) {
    std::vector<std::vector<T>> A(lines.size(),
                                  std::vector<T>(static_cast<std::size_t>(m * n),
                                                 T(0)));
    for (std::size_t r = 0; r < lines.size(); ++r)
        for (auto [i, j] : lines[r].cells)
            A[r][static_cast<std::size_t>(j) * m + i] = T(1);
    return A;
}

template <class T>
std::vector<T> table_vector(const LineSumTable<T>& t,
                            const std::vector<Line>& lines) {
    std::vector<T> b;
    b.reserve(lines.size());
    for (const auto& ln : lines) {
        auto dit = t.sums.find(ln.dir);
        if (dit == t.sums.end())
            throw IncompatibleLineSums("missing direction " + ln.dir.str() +
                                       " in line-sum table");
        auto it = dit->second.find(ln.t);
        if (it == dit->second.end())
            throw IncompatibleLineSums("missing line sum for direction " +
                                       ln.dir.str() + ", t=" +
                                       std::to_string(ln.t));
        b.push_back(it->second);
    }
    return b;
}

}  // namespace detail

// Any exact rational solution of the line-sum system (free cells zero),
// or IncompatibleLineSums if none exists.
inline Grid<Rational> particular_solution(const LineSumTable<Rational>& t,
                                          const DirectionSet& S, long m,
                                          long n) {
    validate_direction_set(S, m, n);
    auto lines = enumerate_lines(S, m, n);
    auto A = detail::line_matrix<Rational>(lines, m, n);
    auto b = detail::table_vector(t, lines);
    auto x = solve_particular(std::move(A), std::move(b));
    if (!x) throw IncompatibleLineSums("line sums admit no real solution");
    Grid<Rational> g(m, n, Rational(0));
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < m; ++i)
            g(i, j) = (*x)[static_cast<std::size_t>(j) * m + i];
    return g;
}

// The unique grid with the given line sums and the prescribed
// values at the bottom-left corners K. Exact rational arithmetic.
inline Grid<Rational> reconstruct_from_corners(
    const std::map<std::pair<long, long>, Rational>& corner_values,
    const LineSumTable<Rational>& t, const DirectionSet& S, long m, long n) {
    auto basis = SwitchingBasis::build(S, m, n);
    for (const auto& corner : basis.corners)
        if (!corner_values.count(corner))
            throw IndexOutOfRange("missing corner value at (" +
                                  std::to_string(corner.first) + "," +
                                  std::to_string(corner.second) + ")");
    Grid<Rational> g = particular_solution(t, S, m, n);

    // Fix the corners by peeling the corner-difference through the basis;
    // each element vanishes at all lex-earlier corners.
    std::vector<Rational> diff;
    diff.reserve(basis.corners.size());
    for (const auto& corner : basis.corners)
        diff.push_back(corner_values.at(corner) -
                       g(corner.first, corner.second));
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        auto [ci, cj] = basis.corners[k];
        Rational c = diff[k] / Rational(basis.elements[k](ci, cj));
        if (c == 0) continue;
        const auto& e = basis.elements[k];
        for (std::size_t l = k + 1; l < basis.corners.size(); ++l) {
            auto [li, lj] = basis.corners[l];
            if (e(li, lj) != 0) diff[l] -= c * Rational(e(li, lj));
        }
        for (long j = 0; j < n; ++j)
            for (long i = 0; i < m; ++i)
                if (e(i, j) != 0) g(i, j) += c * Rational(e(i, j));
    }
    return g;
}

}  // namespace linesum
