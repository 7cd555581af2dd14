#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "linesum/grid.hpp"
#include "linesum/projection.hpp"
#include "linesum/switching.hpp"

namespace linesum {

namespace detail {

inline long floor_long(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r.get_si();
}
inline long floor_long(double x) { return static_cast<long>(std::floor(x)); }

}  // namespace detail

// Integer solution by greedy peeling: singleton lines force
// their cell; otherwise the bottom-left corner of the first switching
// translate that still fits is free and gets value 0.
inline Grid<long> construct_integer_solution(const LineSumTable<long>& t,
                                             const DirectionSet& S, long m,
                                             long n) {
    validate_direction_set(S, m, n);
    auto lines = enumerate_lines(S, m, n);
    auto residual = detail::table_vector(t, lines);
    const BivariatePolynomial FS = switching_polynomial(S);
    const auto base_corner = polynomial_corner(FS);
    std::vector<std::pair<long, long>> support;
    for (const auto& [k, c] : FS.coefficients()) support.push_back(k);

    std::size_t cells = static_cast<std::size_t>(m * n);
    auto cell_idx = [&](long i, long j) {
        return static_cast<std::size_t>(i) * n + j;
    };
    std::vector<std::vector<std::size_t>> cell_lines(cells);
    std::vector<long> remaining(lines.size(), 0);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        remaining[r] = static_cast<long>(lines[r].cells.size());
        for (auto [i, j] : lines[r].cells) cell_lines[cell_idx(i, j)].push_back(r);
    }

    Grid<long> g(m, n, 0);
    std::vector<bool> alive(cells, true);
    std::size_t alive_count = cells;

    auto remove_cell = [&](long i, long j, long value) {
        g(i, j) = value;
        alive[cell_idx(i, j)] = false;
        --alive_count;
        for (std::size_t r : cell_lines[cell_idx(i, j)]) {
            residual[r] -= value;
            --remaining[r];
            if (remaining[r] == 0 && residual[r] != 0)
                throw IncompatibleLineSums(
                    "line residual nonzero after peeling (direction " +
                    lines[r].dir.str() + ", t=" + std::to_string(lines[r].t) +
                    ")");
        }
    };

    while (alive_count > 0) {
        // rule (a): singleton line
        bool advanced = false;
        for (std::size_t r = 0; r < lines.size(); ++r) {
            if (remaining[r] != 1) continue;
            for (auto [i, j] : lines[r].cells)
                if (alive[cell_idx(i, j)]) {
                    remove_cell(i, j, residual[r]);
                    break;
                }
            advanced = true;
            break;
        }
        if (advanced) continue;

        // rule (b): first switching translate still contained in the
        // remaining cells; its bottom-left corner is free
        for (long u = 0; u < m - S.M() && !advanced; ++u)
            for (long v = 0; v < n - S.N() && !advanced; ++v) {
                bool fits = true;
                for (auto [si, sj] : support)
                    if (!alive[cell_idx(u + si, v + sj)]) {
                        fits = false;
                        break;
                    }
                if (fits) {
                    remove_cell(u + base_corner.first, v + base_corner.second, 0);
                    advanced = true;
                }
            }
        if (advanced) continue;

        // Unreachable on a full rectangular grid; solve the
        // remaining system exactly instead.
        std::map<std::pair<long, long>, Rational> zeros;
        for (const auto& c : bottom_left_corners(S, m, n)) zeros[c] = 0;
        auto exact = reconstruct_from_corners(zeros, t.cast<Rational>(), S, m, n);
        Grid<long> out(m, n, 0);
        for (long j = 0; j < n; ++j)
            for (long i = 0; i < m; ++i) out(i, j) = rational_to_long(exact(i, j));
        return out;
    }

    // Full verification of the result against the requested sums.
    auto check = compute_line_sums(g, S);
    auto targets = detail::table_vector(t, lines);
    for (std::size_t r = 0; r < lines.size(); ++r)
        if (check.sums.at(lines[r].dir).at(lines[r].t) != targets[r])
            throw IncompatibleLineSums("peeling produced wrong line sums");
    return g;
}

template <class T>
struct LatticeSolution {
    Grid<long> f;
    Grid<T> anchor;
    T distance_sq;
    double distance;
    Rational bound_sq;
    double bound;
    std::string method;  // babai_rounding / babai_nearest_plane / vertex_enumeration
};

// Covering bound (1/2) sqrt(R(S) (m-M)(n-N)).
inline Rational distance_bound_sq(const DirectionSet& S, long m, long n) {
    validate_direction_set(S, m, n);
    return Rational(weight_R(S) * (m - S.M()) * (n - S.N())) / 4;
}

inline double distance_bound(const DirectionSet& S, long m, long n) {
    return std::sqrt(to_double(distance_bound_sq(S, m, n)));
}

namespace detail {

// Coefficients of a (near) zero-line-sum grid read off at the corners;
// triangular because element k vanishes at all lex-earlier corners.
template <class T>
std::vector<T> corner_coefficients(const Grid<T>& diff,
                                   const SwitchingBasis& basis) {
    std::vector<T> vals;
    vals.reserve(basis.corners.size());
    for (const auto& [ci, cj] : basis.corners) vals.push_back(diff(ci, cj));
    std::vector<T> c(basis.corners.size(), T(0));
    for (std::size_t k = 0; k < basis.corners.size(); ++k) {
        auto [ci, cj] = basis.corners[k];
        c[k] = vals[k] / T(basis.elements[k](ci, cj));
        if (c[k] == T(0)) continue;
        const auto& e = basis.elements[k];
        for (std::size_t l = k + 1; l < basis.corners.size(); ++l) {
            auto [li, lj] = basis.corners[l];
            if (e(li, lj) != 0) vals[l] -= c[k] * T(e(li, lj));
        }
    }
    return c;
}

template <class T>
Grid<long> apply_steps(const Grid<long>& g, const std::vector<long>& z,
                       const SwitchingBasis& basis) {
    Grid<long> f = g;
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k] == 0) continue;
        const auto& e = basis.elements[k];
        for (long j = 0; j < basis.n; ++j)
            for (long i = 0; i < basis.m; ++i)
                if (e(i, j) != 0) f(i, j) -= z[k] * e(i, j);
    }
    return f;
}

template <class T>
T dist_sq(const Grid<long>& f, const Grid<T>& h) {
    T s(0);
    for (long j = 0; j < h.n(); ++j)
        for (long i = 0; i < h.m(); ++i) {
            T d = T(f(i, j)) - h(i, j);
            s += d * d;
        }
    return s;
}

template <class T>
bool within_bound(const T& d_sq, const Rational& bound_sq) {
    if constexpr (is_exact_v<T>)
        return d_sq <= T(bound_sq);
    else
        return d_sq <= to_double(bound_sq) * (1 + 1e-9) + 1e-9;
}

// Babai nearest plane over the switching basis; the error has Gram-
// Schmidt coefficients in [-1/2,1/2], so the covering bound holds.
template <class T>
std::vector<long> nearest_plane_steps(const Grid<T>& diff,
                                      const SwitchingBasis& basis) {
    std::size_t dim = basis.elements.size();
    std::size_t len = static_cast<std::size_t>(basis.m * basis.n);
    auto flat = [&](const Grid<long>& e) {
        std::vector<T> v(len);
        for (long j = 0; j < basis.n; ++j)
            for (long i = 0; i < basis.m; ++i)
                v[static_cast<std::size_t>(j) * basis.m + i] = T(e(i, j));
        return v;
    };
    auto dotv = [&](const std::vector<T>& a, const std::vector<T>& b) {
        T s(0);
        for (std::size_t p = 0; p < len; ++p) s += a[p] * b[p];
        return s;
    };
    std::vector<std::vector<T>> B(dim), Bstar(dim);
    std::vector<T> Bstar_nsq(dim, T(0));
    for (std::size_t k = 0; k < dim; ++k) {
        B[k] = flat(basis.elements[k]);
        Bstar[k] = B[k];
        for (std::size_t l = 0; l < k; ++l) {
            T mu = dotv(Bstar[k], Bstar[l]) / Bstar_nsq[l];
            if (mu != T(0))
                for (std::size_t p = 0; p < len; ++p)
                    Bstar[k][p] -= mu * Bstar[l][p];
        }
        Bstar_nsq[k] = dotv(Bstar[k], Bstar[k]);
    }
    std::vector<T> w(len);
    for (long j = 0; j < basis.n; ++j)
        for (long i = 0; i < basis.m; ++i)
            w[static_cast<std::size_t>(j) * basis.m + i] = diff(i, j);
    std::vector<long> z(dim, 0);
    for (std::size_t k = dim; k-- > 0;) {
        T mu = dotv(w, Bstar[k]) / Bstar_nsq[k];
        z[k] = nearest_long(mu);
        if (z[k] != 0)
            for (std::size_t p = 0; p < len; ++p) w[p] -= T(z[k]) * B[k][p];
    }
    return z;
}

}  // namespace detail

// Nearest-vertex distance squared for a parallelepiped spanned by the
// rows of `edges`, for the point sum(coeffs[k]*edges[k]) with coeffs in
// [0,1]; full enumeration over the 2^d vertices.
template <class T>
T nearest_vertex_distance_sq(const std::vector<std::vector<T>>& edges,
                             const std::vector<T>& coeffs) {
    std::size_t d = edges.size();
    std::vector<std::vector<T>> G(d, std::vector<T>(d, T(0)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t p = 0; p < edges[a].size(); ++p)
                G[a][b] += edges[a][p] * edges[b][p];
    T best(-1);
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        std::vector<T> delta(d);
        for (std::size_t k = 0; k < d; ++k)
            delta[k] = coeffs[k] - T((mask >> k) & 1 ? 1 : 0);
        T q(0);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) q += delta[a] * G[a][b] * delta[b];
        if (best < T(0) || q < best) best = q;
    }
    return best;
}

// Integer solution nearest to the real target h: Babai rounding in the
// switching basis, with nearest-plane and vertex enumeration as
// fallbacks to certify the covering bound.
template <class T>
LatticeSolution<T> nearest_integer_solution(const Grid<T>& h,
                                            const LineSumTable<long>& t,
                                            const DirectionSet& S, long m,
                                            long n) {
    validate_direction_set(S, m, n);
    auto basis = SwitchingBasis::build(S, m, n);

    // h must satisfy the line sums (exactly in rational mode).
    auto h_sums = compute_line_sums(h, S);
    for (const auto& [d, row] : t.sums)
        for (const auto& [key, want] : row) {
            const T& got = h_sums.sums.at(d).at(key);
            if constexpr (is_exact_v<T>) {
                if (got != T(want))
                    throw IncompatibleLineSums("h does not satisfy line sums");
            } else {
                if (std::abs(to_double(got) - double(want)) > kCompatibilityTol)
                    throw IncompatibleLineSums("h does not satisfy line sums");
            }
        }

    Grid<long> g = construct_integer_solution(t, S, m, n);
    Grid<T> diff = g.template cast<T>() - h;
    auto c = detail::corner_coefficients(diff, basis);

    LatticeSolution<T> sol;
    sol.anchor = h;
    sol.bound_sq = distance_bound_sq(S, m, n);
    sol.bound = std::sqrt(to_double(sol.bound_sq));

    std::vector<long> z(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) z[k] = nearest_long(c[k]);
    sol.f = detail::apply_steps<T>(g, z, basis);
    sol.distance_sq = detail::dist_sq(sol.f, h);
    sol.method = "babai_rounding";

    if (!detail::within_bound(sol.distance_sq, sol.bound_sq)) {
        z = detail::nearest_plane_steps(diff, basis);
        sol.f = detail::apply_steps<T>(g, z, basis);
        sol.distance_sq = detail::dist_sq(sol.f, h);
        sol.method = "babai_nearest_plane";
    }

    if (!detail::within_bound(sol.distance_sq, sol.bound_sq)) {
        if (basis.dim() > 20)
            throw DimensionTooLarge(
                "vertex enumeration needs 2^" + std::to_string(basis.dim()) +
                " candidates");
        std::vector<long> base(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) base[k] = detail::floor_long(c[k]);
        for (std::size_t mask = 0; mask < (std::size_t(1) << basis.dim());
             ++mask) {
            std::vector<long> zz = base;
            for (long k = 0; k < basis.dim(); ++k) zz[k] += (mask >> k) & 1;
            Grid<long> f = detail::apply_steps<T>(g, zz, basis);
            T d = detail::dist_sq(f, h);
            if (d < sol.distance_sq) {
                sol.distance_sq = d;
                sol.f = f;
            }
        }
        sol.method = "vertex_enumeration";
    }

    sol.distance = std::sqrt(to_double(sol.distance_sq));
    return sol;
}

// Candidate shortest integer solution: the one nearest to f0. Satisfies
// the corollary bound; not certified globally shortest.
template <class T>
LatticeSolution<T> shortest_integer_candidate(const ProjectionResult<T>& f0,
                                              const LineSumTable<long>& t,
                                              const DirectionSet& S, long m,
                                              long n) {
    return nearest_integer_solution(f0.f0, t, S, m, n);
}

}  // namespace linesum
