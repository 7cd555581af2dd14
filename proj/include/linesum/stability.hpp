#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "linesum/grid.hpp"

namespace linesum {

namespace detail {
inline Rational abs_val(const Rational& x) { return abs(x); }
inline double abs_val(double x) { return std::abs(x); }
}  // namespace detail

template <class T>
struct BinaryRadius {
    T radicand;  // D - |f0|^2
    double radius;
};

// Every binary solution lies at distance sqrt(D - |f0|^2) from f0.
template <class T>
BinaryRadius<T> binary_radius(const T& norm_sq_f0, const T& D) {
    T radicand = D - norm_sq_f0;
    if (radicand < T(0))
        throw NoBinarySolution("D < |f0|^2: no binary solution exists");
    return {radicand, std::sqrt(to_double(radicand))};
}

template <class T>
struct Rounding {
    Grid<int> F;
    T E;  // sum of <f0(i,j)>^2, <x> = min(|x|, |1-x|)
    std::vector<std::pair<long, long>> ties;  // entries equal to 1/2
};

// Round every entry to the nearest of 0 and 1; ties at 1/2 go to 1 and
// are reported.
template <class T>
Rounding<T> round_binary(const Grid<T>& f0) {
    Rounding<T> r{Grid<int>(f0.m(), f0.n(), 0), T(0), {}};
    T half = T(1) / T(2);
    for (long i = 0; i < f0.m(); ++i)
        for (long j = 0; j < f0.n(); ++j) {
            const T& x = f0(i, j);
            T frac = detail::abs_val(x) < detail::abs_val(T(1) - x)
                         ? x
                         : T(1) - x;
            r.E += frac * frac;
            if (x > half) {
                r.F(i, j) = 1;
            } else if (x == half) {
                r.F(i, j) = 1;
                r.ties.emplace_back(i, j);
            }
        }
    return r;
}

template <class T>
struct StabilityReport {
    Grid<int> F;
    T D;
    T norm_sq_f0;
    T E;
    T slack;  // D - E - |f0|^2
    std::vector<T> b_list;  // |2 f0 - 1|, nondecreasing
    long s;
    long t;
    std::vector<std::pair<long, long>> tie_positions;
};

// s and t from the sorted b-values:
//   b_1+...+b_s <= slack < b_1+...+b_{s+1}
//   b_1+...+b_t <= 2*slack < b_1+...+b_{t+1}
// Every binary solution differs from F in at most s cells; two binary
// solutions differ in at most t cells.
template <class T>
StabilityReport<T> stability_bounds(const Grid<T>& f0, const T& D) {
    T nsq = f0.norm_sq();
    auto rounding = round_binary(f0);
    T slack = D - rounding.E - nsq;
    if (slack < T(0))
        throw NoBinarySolution("negative slack D - E - |f0|^2: no binary solution");

    std::vector<std::pair<T, std::pair<long, long>>> bs;
    bs.reserve(static_cast<std::size_t>(f0.m() * f0.n()));
    for (long i = 0; i < f0.m(); ++i)
        for (long j = 0; j < f0.n(); ++j)
            bs.push_back({detail::abs_val(T(2) * f0(i, j) - T(1)), {i, j}});
    std::sort(bs.begin(), bs.end());  // equal b values break by position

    StabilityReport<T> rep{std::move(rounding.F), D, nsq, rounding.E, slack,
                           {}, 0, 0, std::move(rounding.ties)};
    rep.b_list.reserve(bs.size());
    for (const auto& [b, pos] : bs) rep.b_list.push_back(b);

    auto largest_prefix = [&](const T& budget) {
        T prefix(0);
        long count = 0;
        for (const auto& b : rep.b_list) {
            prefix += b;
            if (prefix > budget) break;
            ++count;
        }
        return count;
    };
    rep.s = largest_prefix(slack);
    rep.t = largest_prefix(T(2) * slack);
    return rep;
}

struct BinaryEnumeration {
    std::vector<Grid<int>> solutions;  // lexicographic in cell order
    bool truncated = false;
};

// All binary grids with the given integer line sums, by depth-first
// search over cells in lexicographic (column-major) order with per-line
// partial-sum pruning.
inline BinaryEnumeration enumerate_binary_solutions(
    const LineSumTable<long>& t, const DirectionSet& S, long m, long n,
    long cap = 10000) {
    validate_direction_set(S, m, n);
    auto lines = enumerate_lines(S, m, n);
    auto targets = detail::table_vector(t, lines);

    // Lines through each cell; cells visited with i (column) major.
    std::size_t cells = static_cast<std::size_t>(m * n);
    std::vector<std::vector<std::size_t>> cell_lines(cells);
    std::vector<long> remaining(lines.size(), 0);
    std::vector<long> current(lines.size(), 0);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        remaining[r] = static_cast<long>(lines[r].cells.size());
        for (auto [i, j] : lines[r].cells)
            cell_lines[static_cast<std::size_t>(i) * n + j].push_back(r);
    }

    BinaryEnumeration out;
    std::vector<int> assign(cells, 0);

    auto feasible = [&](std::size_t line) {
        long need = targets[line] - current[line];
        return need >= 0 && need <= remaining[line];
    };

    std::function<bool(std::size_t)> dfs = [&](std::size_t p) -> bool {
        if (p == cells) {
            Grid<int> g(m, n, 0);
            for (long i = 0; i < m; ++i)
                for (long j = 0; j < n; ++j)
                    g(i, j) = assign[static_cast<std::size_t>(i) * n + j];
            out.solutions.push_back(std::move(g));
            if (static_cast<long>(out.solutions.size()) >= cap) {
                out.truncated = true;
                return false;
            }
            return true;
        }
        for (int v = 0; v <= 1; ++v) {
            assign[p] = v;
            bool ok = true;
            for (std::size_t line : cell_lines[p]) {
                current[line] += v;
                --remaining[line];
            }
            for (std::size_t line : cell_lines[p])
                if (!feasible(line)) { ok = false; break; }
            bool keep_going = true;
            if (ok) keep_going = dfs(p + 1);
            for (std::size_t line : cell_lines[p]) {
                current[line] -= v;
                ++remaining[line];
            }
            if (!keep_going) return false;
        }
        return true;
    };
    dfs(0);
    return out;
}

// Hamming distance between binary grids.
inline long hamming(const Grid<int>& a, const Grid<int>& b) {
    long d = 0;
    for (long i = 0; i < a.m(); ++i)
        for (long j = 0; j < a.n(); ++j)
            if (a(i, j) != b(i, j)) ++d;
    return d;
}

}  // namespace linesum
