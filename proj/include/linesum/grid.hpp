#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "linesum/errors.hpp"
#include "linesum/scalar.hpp"

namespace linesum {

// Lattice direction (a,b), normalized: gcd(a,b)=1, a>=0, and a=0 => b=1.
struct Direction {
    long a = 0;
    long b = 0;

    Direction() = default;
    Direction(long a_, long b_) : a(a_), b(b_) { validate(); }

    void validate() const {
        if (a < 0)
            throw MalformedDirection("direction (" + std::to_string(a) + "," +
                                     std::to_string(b) + "): a must be >= 0");
        if (a == 0 && b != 1)
            throw MalformedDirection("direction (0," + std::to_string(b) +
                                     "): a=0 requires b=1");
        if (std::gcd(a, std::abs(b)) != 1)
            throw MalformedDirection("direction (" + std::to_string(a) + "," +
                                     std::to_string(b) + "): gcd != 1");
    }

    auto operator<=>(const Direction&) const = default;

    std::string str() const {
        return std::to_string(a) + "," + std::to_string(b);
    }
};

// Valid direction set for an m x n grid: sum of a's < m and sum of |b|'s < n.
struct DirectionSet {
    std::vector<Direction> directions;

    DirectionSet() = default;
    DirectionSet(std::initializer_list<Direction> ds) : directions(ds) {
        check_distinct();
    }
    explicit DirectionSet(std::vector<Direction> ds)
        : directions(std::move(ds)) {
        check_distinct();
    }

    long M() const {
        long s = 0;
        for (const auto& d : directions) s += d.a;
        return s;
    }
    long N() const {
        long s = 0;
        for (const auto& d : directions) s += std::abs(d.b);
        return s;
    }
    std::size_t size() const { return directions.size(); }

    void check_distinct() const {
        auto ds = directions;
        std::sort(ds.begin(), ds.end());
        if (std::adjacent_find(ds.begin(), ds.end()) != ds.end())
            throw MalformedDirection("directions not pairwise distinct");
    }

    void validate_for(long m, long n) const {
        if (m < 1 || n < 1)
            throw InvalidDirectionSet("grid dimensions must be positive");
        if (directions.empty())
            throw InvalidDirectionSet("empty direction set");
        if (M() >= m || N() >= n)
            throw InvalidDirectionSet(
                "direction set invalid for " + std::to_string(m) + "x" +
                std::to_string(n) + ": M=" + std::to_string(M()) +
                ", N=" + std::to_string(N()));
    }

    bool is_valid_for(long m, long n) const {
        return m >= 1 && n >= 1 && !directions.empty() && M() < m && N() < n;
    }

    // The simple case: exactly row and column sums.
    bool is_simple() const {
        return directions.size() == 2 &&
               ((directions[0] == Direction(1, 0) &&
                 directions[1] == Direction(0, 1)) ||
                (directions[0] == Direction(0, 1) &&
                 directions[1] == Direction(1, 0)));
    }
};

// m x n array of values; i is the column index, j the row index.
template <class T>
class Grid {
public:
    Grid() = default;
    Grid(long m, long n, T fill = T(0))
        : m_(m), n_(n), data_(static_cast<std::size_t>(m * n), fill) {
        if (m < 1 || n < 1)
            throw IndexOutOfRange("grid dimensions must be positive");
    }

    long m() const { return m_; }
    long n() const { return n_; }

    T& operator()(long i, long j) { return data_[idx(i, j)]; }
    const T& operator()(long i, long j) const { return data_[idx(i, j)]; }

    bool in_range(long i, long j) const {
        return 0 <= i && i < m_ && 0 <= j && j < n_;
    }

    T total() const {
        T s(0);
        for (const auto& v : data_) s += v;
        return s;
    }

    T norm_sq() const {
        T s(0);
        for (const auto& v : data_) s += v * v;
        return s;
    }

    bool is_binary() const {
        return std::all_of(data_.begin(), data_.end(),
                           [](const T& v) { return v == T(0) || v == T(1); });
    }

    const std::vector<T>& values() const { return data_; }
    std::vector<T>& values() { return data_; }

    bool operator==(const Grid&) const = default;

    template <class U>
    Grid<U> cast() const {
        Grid<U> g(m_, n_);
        for (long j = 0; j < n_; ++j)
            for (long i = 0; i < m_; ++i) g(i, j) = scalar_cast<U>((*this)(i, j));
        return g;
    }

    Grid& operator+=(const Grid& o) {
        for (std::size_t p = 0; p < data_.size(); ++p) data_[p] += o.data_[p];
        return *this;
    }
    Grid& operator-=(const Grid& o) {
        for (std::size_t p = 0; p < data_.size(); ++p) data_[p] -= o.data_[p];
        return *this;
    }
    friend Grid operator+(Grid a, const Grid& b) { return a += b; }
    friend Grid operator-(Grid a, const Grid& b) { return a -= b; }

private:
    std::size_t idx(long i, long j) const {
        if (!in_range(i, j))
            throw IndexOutOfRange("grid index (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range");
        return static_cast<std::size_t>(j) * m_ + i;
    }

    long m_ = 0, n_ = 0;
    std::vector<T> data_;
};

// A line with direction (a,b) through (i,j) is keyed by t = a*j - b*i.
inline long line_key(const Direction& d, long i, long j) {
    return d.a * j - d.b * i;
}

// All line keys of direction d meeting the m x n grid, increasing.
inline std::vector<long> line_keys(const Direction& d, long m, long n) {
    long lo = 0, hi = 0;
    // t = a*j - b*i over 0<=i<m, 0<=j<n
    long t00 = 0, t10 = -d.b * (m - 1), t01 = d.a * (n - 1),
         t11 = d.a * (n - 1) - d.b * (m - 1);
    lo = std::min({t00, t10, t01, t11});
    hi = std::max({t00, t10, t01, t11});
    std::vector<long> keys;
    keys.reserve(hi - lo + 1);
    for (long t = lo; t <= hi; ++t) keys.push_back(t);
    return keys;
}

// Cells of the line a*j = b*i + t inside the m x n grid, lexicographic.
inline std::vector<std::pair<long, long>> line_cells(const Direction& d, long t,
                                                     long m, long n) {
    std::vector<std::pair<long, long>> cells;
    if (d.a == 0) {
        // b=1: line is i = -t
        long i = -t;
        if (0 <= i && i < m)
            for (long j = 0; j < n; ++j) cells.emplace_back(i, j);
        return cells;
    }
    for (long i = 0; i < m; ++i) {
        long num = d.b * i + t;
        if (num % d.a != 0) continue;
        long j = num / d.a;
        if (0 <= j && j < n) cells.emplace_back(i, j);
    }
    return cells;
}

// Per-direction map t -> line sum, plus the grand total D.
template <class T>
struct LineSumTable {
    std::map<Direction, std::map<long, T>> sums;
    T total = T(0);

    template <class U>
    LineSumTable<U> cast() const {
        LineSumTable<U> t;
        t.total = scalar_cast<U>(total);
        for (const auto& [d, row] : sums)
            for (const auto& [key, v] : row) t.sums[d][key] = scalar_cast<U>(v);
        return t;
    }

    DirectionSet direction_set() const {
        std::vector<Direction> ds;
        for (const auto& [d, row] : sums) ds.push_back(d);
        return DirectionSet(std::move(ds));
    }
};

// Enumeration of all nonempty lines of a direction set on an m x n grid.
struct Line {
    Direction dir;
    long t;
    std::vector<std::pair<long, long>> cells;
};

inline std::vector<Line> enumerate_lines(const DirectionSet& S, long m,
                                         long n) {
    std::vector<Line> lines;
    for (const auto& d : S.directions)
        for (long t : line_keys(d, m, n)) {
            auto cells = line_cells(d, t, m, n);
            if (!cells.empty()) lines.push_back({d, t, std::move(cells)});
        }
    return lines;
}

struct ValidationResult {
    long M;
    long N;
};

inline ValidationResult validate_direction_set(const DirectionSet& S, long m,
                                               long n) {
    for (const auto& d : S.directions) d.validate();
    S.check_distinct();
    S.validate_for(m, n);
    return {S.M(), S.N()};
}

template <class T>
LineSumTable<T> compute_line_sums(const Grid<T>& g, const DirectionSet& S) {
    validate_direction_set(S, g.m(), g.n());
    LineSumTable<T> table;
    table.total = g.total();
    for (const auto& d : S.directions) {
        auto& row = table.sums[d];
        for (long j = 0; j < g.n(); ++j)
            for (long i = 0; i < g.m(); ++i) {
                long t = line_key(d, i, j);
                auto it = row.find(t);
                if (it == row.end())
                    row.emplace(t, g(i, j));
                else
                    it->second += g(i, j);
            }
    }
    return table;
}

// Number of independent linear dependencies among the line sums:
// M*N - sum of a_d*|b_d|.
inline long dependency_count(const DirectionSet& S, long m, long n) {
    validate_direction_set(S, m, n);
    long s = 0;
    for (const auto& d : S.directions) s += d.a * std::abs(d.b);
    return S.M() * S.N() - s;
}

}  // namespace linesum
