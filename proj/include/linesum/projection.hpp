#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "linesum/grid.hpp"
#include "linesum/linalg.hpp"
#include "linesum/switching.hpp"

namespace linesum {

template <class T>
struct ProjectionResult {
    Grid<T> f0;
    T norm_sq;
    std::string method;  // "closed_form" or "minimum_norm_numeric"
    double residual;
};

template <class T>
T norm_sq(const Grid<T>& g) {
    return g.norm_sq();
}

// Closed form for the simple case:
// f0(i,j) = c_i/n + r_j/m - D/(mn), exact rational.
inline ProjectionResult<Rational> project_simple(
    const std::vector<Rational>& row_sums,
    const std::vector<Rational>& col_sums) {
    long n = static_cast<long>(row_sums.size());
    long m = static_cast<long>(col_sums.size());
    if (m < 1 || n < 1)
        throw InvalidDirectionSet("need at least one row and one column");
    Rational D(0), Dc(0);
    for (const auto& r : row_sums) D += r;
    for (const auto& c : col_sums) Dc += c;
    if (D != Dc)
        throw InconsistentTotals("sum of row sums (" + rational_to_string(D) +
                                 ") != sum of column sums (" +
                                 rational_to_string(Dc) + ")");
    ProjectionResult<Rational> res{Grid<Rational>(m, n, Rational(0)),
                                   Rational(0), "closed_form", 0.0};
    Rational base = D / Rational(m * n);
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < m; ++i)
            res.f0(i, j) = col_sums[i] / Rational(n) + row_sums[j] / Rational(m) - base;
    res.norm_sq = res.f0.norm_sq();
    return res;
}

namespace detail {

struct LineOperator {
    std::vector<Line> lines;
    long m, n;

    LineOperator(const DirectionSet& S, long m_, long n_)
        : lines(enumerate_lines(S, m_, n_)), m(m_), n(n_) {}

    std::size_t cells() const { return static_cast<std::size_t>(m * n); }

    // x (grid, row-major) -> line sums
    std::vector<double> apply(const std::vector<double>& x) const {
        std::vector<double> y(lines.size(), 0.0);
        for (std::size_t r = 0; r < lines.size(); ++r)
            for (auto [i, j] : lines[r].cells)
                y[r] += x[static_cast<std::size_t>(j) * m + i];
        return y;
    }

    // line values -> grid
    std::vector<double> apply_transpose(const std::vector<double>& y) const {
        std::vector<double> x(cells(), 0.0);
        for (std::size_t r = 0; r < lines.size(); ++r)
            for (auto [i, j] : lines[r].cells)
                x[static_cast<std::size_t>(j) * m + i] += y[r];
        return x;
    }
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// CGLS started at zero converges to the minimum-norm least-squares grid.
inline std::vector<double> cgls_min_norm(const LineOperator& op,
                                         const std::vector<double>& b,
                                         double rel_tol, long max_iter) {
    std::vector<double> x(op.cells(), 0.0);
    std::vector<double> r = b;
    std::vector<double> s = op.apply_transpose(r);
    std::vector<double> p = s;
    double gamma = dot(s, s);
    double gamma0 = gamma;
    if (gamma0 == 0.0) return x;
    for (long it = 0; it < max_iter; ++it) {
        std::vector<double> q = op.apply(p);
        double qq = dot(q, q);
        if (qq == 0.0) break;
        double alpha = gamma / qq;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += alpha * p[i];
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= alpha * q[i];
        s = op.apply_transpose(r);
        double gamma_new = dot(s, s);
        if (gamma_new <= rel_tol * rel_tol * gamma0) break;
        double beta = gamma_new / gamma;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = s[i] + beta * p[i];
        gamma = gamma_new;
    }
    return x;
}

}  // namespace detail

// Least-squares residual of the line-sum system, float path.
inline double compatibility_residual(const LineSumTable<double>& t,
                                     const DirectionSet& S, long m, long n) {
    validate_direction_set(S, m, n);
    detail::LineOperator op(S, m, n);
    auto b = detail::table_vector(t, op.lines);
    auto x = detail::cgls_min_norm(op, b, 1e-12,
                                   10 * static_cast<long>(op.lines.size()));
    auto y = op.apply(x);
    double r2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        r2 += (y[i] - b[i]) * (y[i] - b[i]);
    return std::sqrt(r2);
}

// Exact squared least-squares residual on the rational path: solve the
// normal equations A^T A x = A^T b exactly, then measure |Ax - b|^2.
inline Rational compatibility_residual_sq(const LineSumTable<Rational>& t,
                                          const DirectionSet& S, long m,
                                          long n) {
    validate_direction_set(S, m, n);
    auto lines = enumerate_lines(S, m, n);
    auto A = detail::line_matrix<Rational>(lines, m, n);
    auto b = detail::table_vector(t, lines);
    std::size_t cells = static_cast<std::size_t>(m * n);
    std::vector<std::vector<Rational>> G(cells,
                                         std::vector<Rational>(cells, Rational(0)));
    std::vector<Rational> Atb(cells, Rational(0));
    for (std::size_t r = 0; r < lines.size(); ++r) {
        const auto& row = A[r];
        for (std::size_t c1 = 0; c1 < cells; ++c1) {
            if (row[c1] == 0) continue;
            Atb[c1] += b[r];
            for (std::size_t c2 = 0; c2 < cells; ++c2)
                if (row[c2] != 0) G[c1][c2] += 1;
        }
    }
    auto x = solve_particular(std::move(G), std::move(Atb));
    // Normal equations are always consistent.
    Rational r2(0);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        Rational s(0);
        for (auto [i, j] : lines[r].cells)
            s += (*x)[static_cast<std::size_t>(j) * m + i];
        Rational diff = s - b[r];
        r2 += diff * diff;
    }
    return r2;
}

inline constexpr double kCompatibilityTol = 1e-8;

inline bool is_compatible(const LineSumTable<Rational>& t,
                          const DirectionSet& S, long m, long n) {
    return compatibility_residual_sq(t, S, m, n) == 0;
}

inline bool is_compatible(const LineSumTable<double>& t, const DirectionSet& S,
                          long m, long n, double tol = kCompatibilityTol) {
    return compatibility_residual(t, S, m, n) <= tol;
}

// Minimum-norm real solution for a general direction set (float path).
inline ProjectionResult<double> project_general(const LineSumTable<double>& t,
                                                const DirectionSet& S, long m,
                                                long n,
                                                double tol = kCompatibilityTol) {
    validate_direction_set(S, m, n);
    detail::LineOperator op(S, m, n);
    auto b = detail::table_vector(t, op.lines);
    auto x = detail::cgls_min_norm(op, b, 1e-12,
                                   10 * static_cast<long>(op.lines.size()));
    auto y = op.apply(x);
    double r2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        r2 += (y[i] - b[i]) * (y[i] - b[i]);
    double residual = std::sqrt(r2);
    if (residual > tol)
        throw IncompatibleLineSums("least-squares residual " +
                                   std::to_string(residual) +
                                   " exceeds tolerance");
    ProjectionResult<double> res{Grid<double>(m, n, 0.0), 0.0,
                                 "minimum_norm_numeric", residual};
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < m; ++i)
            res.f0(i, j) = x[static_cast<std::size_t>(j) * m + i];
    res.norm_sq = res.f0.norm_sq();
    return res;
}

}  // namespace linesum
