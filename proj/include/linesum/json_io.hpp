#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "linesum/continuous.hpp"
#include "linesum/grid.hpp"
#include "linesum/torus.hpp"

namespace linesum {

using json = nlohmann::json;

inline json rational_to_json(const Rational& q) { return rational_to_string(q); }

inline Rational rational_from_json(const json& v) {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_float()) {
        // floats appear only on the numeric path; keep them exactly
        Rational q(v.get<double>());
        q.canonicalize();
        return q;
    }
    throw ParseError("expected rational value, got " + v.dump());
}

// Grids serialize row-major, row j=0 first; value (i,j) at [j][i].
template <class T>
json grid_to_json(const Grid<T>& g) {
    json rows = json::array();
    for (long j = 0; j < g.n(); ++j) {
        json row = json::array();
        for (long i = 0; i < g.m(); ++i) {
            if constexpr (std::is_same_v<T, Rational>)
                row.push_back(rational_to_json(g(i, j)));
            else
                row.push_back(g(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Grid<Rational> grid_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty() || !rows[0].is_array() ||
        rows[0].empty())
        throw ParseError("grid must be a nonempty array of nonempty rows");
    long n = static_cast<long>(rows.size());
    long m = static_cast<long>(rows[0].size());
    Grid<Rational> g(m, n, Rational(0));
    for (long j = 0; j < n; ++j) {
        if (static_cast<long>(rows[j].size()) != m)
            throw ParseError("ragged grid rows");
        for (long i = 0; i < m; ++i) g(i, j) = rational_from_json(rows[j][i]);
    }
    return g;
}

inline Direction direction_from_json(const json& v) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError("direction must be [a,b]");
    return Direction(v[0].get<long>(), v[1].get<long>());
}

inline Direction direction_from_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
        throw ParseError("direction key must be \"a,b\": " + key);
    try {
        return Direction(std::stol(key.substr(0, comma)),
                         std::stol(key.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad direction key: " + key);
    }
}

// A line-sum reconstruction instance as read from JSON; exact rationals
// throughout, with integer/float views derived on demand.
struct Instance {
    long m = 0, n = 0;
    DirectionSet S;
    LineSumTable<Rational> sums;
    bool simple = false;  // parsed from row_sums/col_sums shorthand

    bool all_integer() const {
        for (const auto& [d, row] : sums.sums)
            for (const auto& [t, v] : row)
                if (!rational_is_integer(v)) return false;
        return true;
    }

    LineSumTable<long> integer_sums() const {
        LineSumTable<long> t;
        t.total = rational_to_long(sums.total);
        for (const auto& [d, row] : sums.sums)
            for (const auto& [key, v] : row) t.sums[d][key] = rational_to_long(v);
        return t;
    }

    LineSumTable<double> float_sums() const {
        return sums.cast<double>();
    }

    std::vector<Rational> row_sums() const {
        std::vector<Rational> r(n, Rational(0));
        const auto& row = sums.sums.at(Direction(1, 0));
        for (const auto& [t, v] : row) r.at(t) = v;
        return r;
    }
    std::vector<Rational> col_sums() const {
        std::vector<Rational> c(m, Rational(0));
        const auto& col = sums.sums.at(Direction(0, 1));
        for (const auto& [t, v] : col) c.at(-t) = v;
        return c;
    }
};

inline Instance instance_from_json(const json& j) {
    Instance inst;
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    inst.m = j.at("m").get<long>();
    inst.n = j.at("n").get<long>();
    if (inst.m < 1 || inst.n < 1) throw ParseError("m and n must be positive");

    if (j.contains("row_sums") || j.contains("col_sums")) {
        // simple-case shorthand
        auto rows = j.at("row_sums");
        auto cols = j.at("col_sums");
        if (static_cast<long>(rows.size()) != inst.n ||
            static_cast<long>(cols.size()) != inst.m)
            throw ParseError("row_sums must have n entries, col_sums m entries");
        inst.S = DirectionSet{Direction(1, 0), Direction(0, 1)};
        inst.simple = true;
        Rational total(0);
        for (long t = 0; t < inst.n; ++t) {
            Rational v = rational_from_json(rows[t]);
            inst.sums.sums[Direction(1, 0)][t] = v;
            total += v;
        }
        // column i is the line t = -i of direction (0,1)
        for (long i = 0; i < inst.m; ++i)
            inst.sums.sums[Direction(0, 1)][-i] = rational_from_json(cols[i]);
        inst.sums.total = total;
        return inst;
    }

    std::vector<Direction> dirs;
    for (const auto& d : j.at("directions")) dirs.push_back(direction_from_json(d));
    inst.S = DirectionSet(std::move(dirs));
    const auto& ls = j.at("line_sums");
    if (!ls.is_object()) throw ParseError("line_sums must be an object");
    for (const auto& [key, row] : ls.items()) {
        Direction d = direction_from_key(key);
        for (const auto& [tkey, v] : row.items()) {
            long t;
            try {
                t = std::stol(tkey);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad line index: " + tkey);
            }
            inst.sums.sums[d][t] = rational_from_json(v);
        }
    }
    if (inst.sums.sums.size() != inst.S.directions.size())
        throw ParseError("line_sums directions do not match 'directions'");
    Rational total(0);
    for (const auto& [t, v] : inst.sums.sums.begin()->second) total += v;
    inst.sums.total = total;
    return inst;
}

template <class T>
json line_sum_table_to_json(const LineSumTable<T>& t) {
    json ls = json::object();
    for (const auto& [d, row] : t.sums) {
        json r = json::object();
        for (const auto& [key, v] : row) {
            if constexpr (std::is_same_v<T, Rational>)
                r[std::to_string(key)] = rational_to_json(v);
            else
                r[std::to_string(key)] = v;
        }
        ls[d.str()] = std::move(r);
    }
    return ls;
}

inline TorusInstance<Rational> torus_instance_from_json(const json& j) {
    TorusInstance<Rational> inst;
    inst.n = j.at("n").get<long>();
    if (inst.n < 1) throw ParseError("n must be positive");
    for (const auto& d : j.at("directions")) {
        if (!d.is_array() || d.size() != 2)
            throw ParseError("direction must be [a,b]");
        inst.directions.emplace_back(d[0].get<long>(), d[1].get<long>());
    }
    const auto& ls = j.at("line_sums");
    for (const auto& d : inst.directions) {
        const auto key = d.str();
        if (!ls.contains(key))
            throw ParseError("missing line sums for direction " + key);
        std::vector<Rational> sums;
        for (const auto& v : ls.at(key)) sums.push_back(rational_from_json(v));
        inst.line_sums.push_back(std::move(sums));
    }
    if (!inst.line_sums.empty()) {
        inst.total = Rational(0);
        for (const auto& v : inst.line_sums[0]) inst.total += v;
    }
    return inst;
}

inline std::pair<RectUnion, std::pair<Rational, Rational>>
rect_union_from_json(const json& j) {
    Rational m = rational_from_json(j.at("m"));
    Rational n = rational_from_json(j.at("n"));
    RectUnion A;
    for (const auto& r : j.at("rects")) {
        if (!r.is_array() || r.size() != 4)
            throw ParseError("rect must be [x1,y1,x2,y2]");
        A.rects.push_back({rational_from_json(r[0]), rational_from_json(r[1]),
                           rational_from_json(r[2]), rational_from_json(r[3])});
    }
    return {A, {m, n}};
}

inline json step_profile_to_json(const StepProfile& p) {
    json b = json::array(), v = json::array();
    for (const auto& x : p.breakpoints) b.push_back(rational_to_json(x));
    for (const auto& x : p.values) v.push_back(rational_to_json(x));
    return json{{"breakpoints", b}, {"values", v}};
}

}  // namespace linesum
