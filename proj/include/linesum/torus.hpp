#pragma once

#include <numeric>
#include <vector>

#include "linesum/grid.hpp"

namespace linesum {

// Direction on the n x n torus: 0 <= a,b < n, gcd(a,b) = 1.
struct TorusDirection {
    long a = 0;
    long b = 0;

    TorusDirection() = default;
    TorusDirection(long a_, long b_) : a(a_), b(b_) {}

    bool admissible(long n) const {
        return 0 <= a && a < n && 0 <= b && b < n && std::gcd(a, b) == 1;
    }
    void require_admissible(long n) const {
        if (!admissible(n))
            throw NotAdmissible("direction (" + std::to_string(a) + "," +
                                std::to_string(b) + ") not admissible mod " +
                                std::to_string(n));
    }
    auto operator<=>(const TorusDirection&) const = default;
    std::string str() const {
        return std::to_string(a) + "," + std::to_string(b);
    }
};

// The n points {p + t(a,b) mod n : t = 0..n-1}.
inline std::vector<std::pair<long, long>> torus_line(const TorusDirection& d,
                                                     std::pair<long, long> p,
                                                     long n) {
    d.require_admissible(n);
    std::vector<std::pair<long, long>> pts;
    pts.reserve(n);
    long x = ((p.first % n) + n) % n, y = ((p.second % n) + n) % n;
    for (long t = 0; t < n; ++t) {
        pts.emplace_back(x, y);
        x = (x + d.a) % n;
        y = (y + d.b) % n;
    }
    return pts;
}

// gcd(a*d - b*c, n) = 1: crossing lines share exactly one point.
inline bool are_independent(const TorusDirection& d1, const TorusDirection& d2,
                            long n) {
    long det = d1.a * d2.b - d1.b * d2.a;
    det = ((det % n) + n) % n;
    return std::gcd(det, n) == 1;
}

// Representative points P_t(a,b), t = 0..n-1: the t-th representative is
// the lexicographically first point not on an earlier representative's
// line. line_index maps each point of A to its class.
struct TorusPartition {
    std::vector<std::pair<long, long>> representatives;
    std::vector<long> line_index;  // [i*n + j] -> t

    static TorusPartition build(const TorusDirection& d, long n) {
        d.require_admissible(n);
        TorusPartition part;
        part.line_index.assign(static_cast<std::size_t>(n * n), -1);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                if (part.line_index[static_cast<std::size_t>(i) * n + j] != -1)
                    continue;
                long t = static_cast<long>(part.representatives.size());
                part.representatives.emplace_back(i, j);
                for (auto [x, y] : torus_line(d, {i, j}, n))
                    part.line_index[static_cast<std::size_t>(x) * n + y] = t;
            }
        return part;
    }
};

template <class T>
struct TorusInstance {
    long n = 0;
    std::vector<TorusDirection> directions;
    std::vector<std::vector<T>> line_sums;  // [dir][t], t indexing P_t
    T total = T(0);

    void require_pairwise_independent() const {
        for (std::size_t p = 0; p < directions.size(); ++p)
            for (std::size_t q = p + 1; q < directions.size(); ++q)
                if (!are_independent(directions[p], directions[q], n))
                    throw DependentDirections(
                        "directions (" + directions[p].str() + ") and (" +
                        directions[q].str() + ") dependent mod " +
                        std::to_string(n));
    }
};

template <class T>
TorusInstance<T> torus_line_sums(const Grid<T>& g,
                                 const std::vector<TorusDirection>& dirs) {
    if (g.m() != g.n()) throw NotAdmissible("torus grid must be square");
    long n = g.n();
    TorusInstance<T> inst;
    inst.n = n;
    inst.directions = dirs;
    inst.total = g.total();
    for (const auto& d : dirs) {
        auto part = TorusPartition::build(d, n);
        std::vector<T> sums(n, T(0));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                sums[part.line_index[static_cast<std::size_t>(i) * n + j]] +=
                    g(i, j);
        inst.line_sums.push_back(std::move(sums));
    }
    return inst;
}

// Shortest torus solution:
// f0(i,j) = sum_d L((a,b), t(i,j))/n - (k-1) T/n^2.
template <class T>
Grid<T> torus_project(const TorusInstance<T>& inst) {
    long n = inst.n;
    if (n < 1) throw NotAdmissible("torus size must be positive");
    if (inst.directions.size() != inst.line_sums.size())
        throw ParseError("line_sums/directions size mismatch");
    for (const auto& d : inst.directions) d.require_admissible(n);
    inst.require_pairwise_independent();
    for (std::size_t di = 0; di < inst.directions.size(); ++di) {
        if (static_cast<long>(inst.line_sums[di].size()) != n)
            throw ParseError("direction " + inst.directions[di].str() +
                             " needs exactly n line sums");
        T s(0);
        for (const auto& v : inst.line_sums[di]) s += v;
        if constexpr (is_exact_v<T>) {
            if (s != inst.total)
                throw InconsistentTotals("line sums of direction " +
                                         inst.directions[di].str() +
                                         " do not add up to the total");
        } else {
            if (std::abs(to_double(s) - to_double(inst.total)) > 1e-8)
                throw InconsistentTotals("line sums of direction " +
                                         inst.directions[di].str() +
                                         " do not add up to the total");
        }
    }

    long k = static_cast<long>(inst.directions.size());
    Grid<T> f0(n, n, T(0));
    T shift = T(k - 1) * inst.total / T(n * n);
    for (std::size_t di = 0; di < inst.directions.size(); ++di) {
        auto part = TorusPartition::build(inst.directions[di], n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                f0(i, j) +=
                    inst.line_sums[di]
                                  [part.line_index[static_cast<std::size_t>(i) * n +
                                                   j]] /
                    T(n);
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) f0(i, j) -= shift;
    return f0;
}

}  // namespace linesum
