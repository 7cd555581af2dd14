#pragma once

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "linesum/linesum.hpp"

namespace test_helpers {

using namespace linesum;

using Rng = std::mt19937;

inline Grid<int> random_binary_grid(long m, long n, Rng& rng) {
    Grid<int> g(m, n, 0);
    std::bernoulli_distribution bit(0.5);
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < m; ++i) g(i, j) = bit(rng) ? 1 : 0;
    return g;
}

inline Grid<long> random_integer_grid(long m, long n, long lo, long hi,
                                      Rng& rng) {
    Grid<long> g(m, n, 0);
    std::uniform_int_distribution<long> val(lo, hi);
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < m; ++i) g(i, j) = val(rng);
    return g;
}

inline Rational random_rational(Rng& rng, long num_lo = -5, long num_hi = 5,
                                long den_hi = 4) {
    std::uniform_int_distribution<long> num(num_lo, num_hi);
    std::uniform_int_distribution<long> den(1, den_hi);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Grid<Rational> random_rational_grid(long m, long n, Rng& rng) {
    Grid<Rational> g(m, n, Rational(0));
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < m; ++i) g(i, j) = random_rational(rng);
    return g;
}

// All normalized primitive directions with a <= amax, |b| <= bmax.
inline std::vector<Direction> direction_universe(long amax, long bmax) {
    std::vector<Direction> dirs;
    dirs.emplace_back(0, 1);
    for (long a = 1; a <= amax; ++a)
        for (long b = -bmax; b <= bmax; ++b)
            if (std::gcd(a, std::abs(b)) == 1) dirs.emplace_back(a, b);
    return dirs;
}

// All valid direction sets with at most k_max directions for an m x n grid.
inline std::vector<DirectionSet> all_valid_direction_sets(long k_max, long m,
                                                          long n) {
    auto universe = direction_universe(m - 1, n - 1);
    std::vector<DirectionSet> out;
    std::size_t u = universe.size();
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!idx.empty()) {
            std::vector<Direction> ds;
            for (auto k : idx) ds.push_back(universe[k]);
            DirectionSet S(std::move(ds));
            if (S.is_valid_for(m, n)) out.push_back(S);
        }
        if (static_cast<long>(idx.size()) == k_max) return;
        for (std::size_t k = start; k < u; ++k) {
            idx.push_back(k);
            rec(k + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return out;
}

// Independent rank oracle: the line-sum matrix built straight from the
// definition a*j = b*i + t, not from the library's line enumeration.
inline long line_matrix_rank(const DirectionSet& S, long m, long n) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& d : S.directions) {
        std::set<long> keys;
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < n; ++j) keys.insert(d.a * j - d.b * i);
        for (long t : keys) {
            std::vector<Rational> row(static_cast<std::size_t>(m * n),
                                      Rational(0));
            for (long i = 0; i < m; ++i)
                for (long j = 0; j < n; ++j)
                    if (d.a * j == d.b * i + t)
                        row[static_cast<std::size_t>(j) * m + i] = 1;
            rows.push_back(std::move(row));
        }
    }
    return matrix_rank(std::move(rows));
}

inline long line_count(const DirectionSet& S, long m, long n) {
    long count = 0;
    for (const auto& d : S.directions) {
        std::set<long> keys;
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < n; ++j) keys.insert(d.a * j - d.b * i);
        count += static_cast<long>(keys.size());
    }
    return count;
}

template <class T>
T grid_inner_product(const Grid<T>& a, const Grid<T>& b) {
    T s(0);
    for (long j = 0; j < a.n(); ++j)
        for (long i = 0; i < a.m(); ++i) s += a(i, j) * b(i, j);
    return s;
}

// Simple-case instance from random row/column sums of a hidden binary grid.
struct SimpleInstance {
    Grid<int> hidden;
    std::vector<Rational> row_sums;
    std::vector<Rational> col_sums;
    LineSumTable<long> sums;
    Rational D;
};

inline SimpleInstance random_simple_instance(long m, long n, Rng& rng) {
    SimpleInstance inst;
    inst.hidden = random_binary_grid(m, n, rng);
    auto table = compute_line_sums(inst.hidden.cast<long>(),
                                   DirectionSet{Direction(1, 0), Direction(0, 1)});
    inst.sums = table;
    inst.D = Rational(table.total);
    inst.row_sums.assign(n, Rational(0));
    inst.col_sums.assign(m, Rational(0));
    for (const auto& [t, v] : table.sums.at(Direction(1, 0)))
        inst.row_sums[t] = v;
    for (const auto& [t, v] : table.sums.at(Direction(0, 1)))
        inst.col_sums[-t] = v;
    return inst;
}

}  // namespace test_helpers
