#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "linesum/grid.hpp"
#include "linesum/scalar.hpp"

namespace linesum {

// Piecewise-constant function on [breakpoints.front(), breakpoints.back()]
// with exact rational breakpoints and values.
struct StepProfile {
    std::vector<Rational> breakpoints;  // strictly increasing, size B+1
    std::vector<Rational> values;       // size B

    static StepProfile constant(const Rational& lo, const Rational& hi,
                                const Rational& v) {
        return {{lo, hi}, {v}};
    }

    Rational domain_lo() const { return breakpoints.front(); }
    Rational domain_hi() const { return breakpoints.back(); }

    // Value at x; right-continuous, last piece closed.
    Rational eval(const Rational& x) const {
        for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k)
            if (x < breakpoints[k + 1] || k + 2 == breakpoints.size())
                return values[k];
        return values.back();
    }

    Rational integral() const {
        Rational s(0);
        for (std::size_t k = 0; k < values.size(); ++k)
            s += values[k] * (breakpoints[k + 1] - breakpoints[k]);
        return s;
    }

    StepProfile scaled(const Rational& c) const {
        StepProfile r = *this;
        for (auto& v : r.values) v *= c;
        return r;
    }

    StepProfile shifted(const Rational& c) const {
        StepProfile r = *this;
        for (auto& v : r.values) v += c;
        return r;
    }
};

// Integral of the product of two profiles over their (shared) domain.
inline Rational product_integral(const StepProfile& f, const StepProfile& g) {
    std::set<Rational> cuts(f.breakpoints.begin(), f.breakpoints.end());
    cuts.insert(g.breakpoints.begin(), g.breakpoints.end());
    Rational s(0);
    auto it = cuts.begin();
    Rational prev = *it++;
    for (; it != cuts.end(); ++it) {
        Rational mid = (prev + *it) / 2;
        s += f.eval(mid) * g.eval(mid) * (*it - prev);
        prev = *it;
    }
    return s;
}

// Axis-aligned rectangle [x1,x2] x [y1,y2].
struct Rect {
    Rational x1, y1, x2, y2;
    Rational area() const { return (x2 - x1) * (y2 - y1); }
};

// Pairwise interior-disjoint rectangles inside [0,m] x [0,n].
struct RectUnion {
    std::vector<Rect> rects;

    void validate(const Rational& m, const Rational& n) const {
        for (const auto& r : rects) {
            if (!(0 <= r.x1 && r.x1 < r.x2 && r.x2 <= m && 0 <= r.y1 &&
                  r.y1 < r.y2 && r.y2 <= n))
                throw OverlappingRectangles("rectangle outside [0," +
                                            rational_to_string(m) + "]x[0," +
                                            rational_to_string(n) +
                                            "] or degenerate");
        }
        for (std::size_t a = 0; a < rects.size(); ++a)
            for (std::size_t b = a + 1; b < rects.size(); ++b) {
                const Rect &p = rects[a], &q = rects[b];
                if (p.x1 < q.x2 && q.x1 < p.x2 && p.y1 < q.y2 && q.y1 < p.y2)
                    throw OverlappingRectangles(
                        "rectangles " + std::to_string(a) + " and " +
                        std::to_string(b) + " overlap");
            }
    }

    Rational measure() const {
        Rational s(0);
        for (const auto& r : rects) s += r.area();
        return s;
    }
};

struct Profiles {
    StepProfile col;  // c(x) on [0,m]
    StepProfile row;  // r(y) on [0,n]
    Rational measure;
};

// Exact column and row integrals of the characteristic function of A.
inline Profiles profiles(const RectUnion& A, const Rational& m,
                         const Rational& n) {
    A.validate(m, n);
    auto axis_profile = [](const std::vector<Rect>& rects, const Rational& hi,
                           bool columns) {
        std::set<Rational> cuts{Rational(0), hi};
        for (const auto& r : rects) {
            cuts.insert(columns ? r.x1 : r.y1);
            cuts.insert(columns ? r.x2 : r.y2);
        }
        StepProfile p;
        p.breakpoints.assign(cuts.begin(), cuts.end());
        for (std::size_t k = 0; k + 1 < p.breakpoints.size(); ++k) {
            Rational mid = (p.breakpoints[k] + p.breakpoints[k + 1]) / 2;
            Rational v(0);
            for (const auto& r : rects) {
                if (columns && r.x1 <= mid && mid < r.x2) v += r.y2 - r.y1;
                if (!columns && r.y1 <= mid && mid < r.y2) v += r.x2 - r.x1;
            }
            p.values.push_back(v);
        }
        return p;
    };
    return {axis_profile(A.rects, m, true), axis_profile(A.rects, n, false),
            A.measure()};
}

// Finite sum of separable products u_i(x) v_i(y).
struct SeparableFn {
    std::vector<std::pair<StepProfile, StepProfile>> terms;

    static SeparableFn product(StepProfile u, StepProfile v) {
        return {{{std::move(u), std::move(v)}}};
    }
};

inline Rational inner_product(const SeparableFn& f, const SeparableFn& g) {
    Rational s(0);
    for (const auto& [fu, fv] : f.terms)
        for (const auto& [gu, gv] : g.terms)
            s += product_integral(fu, gu) * product_integral(fv, gv);
    return s;
}

// f0(x,y) = c(x)/n + r(y)/m - lambda(A)/(mn), stored by its separable parts.
struct SeparableF0 {
    StepProfile col_profile;  // c(x)/n
    StepProfile row_profile;  // r(y)/m
    Rational constant;        // -lambda/(mn)
    Rational m, n;

    Rational eval(const Rational& x, const Rational& y) const {
        return col_profile.eval(x) + row_profile.eval(y) + constant;
    }

    SeparableFn as_separable() const {
        StepProfile onex = StepProfile::constant(0, m, 1);
        StepProfile oney = StepProfile::constant(0, n, 1);
        SeparableFn f;
        f.terms.push_back({col_profile, oney});
        f.terms.push_back({onex, row_profile});
        f.terms.push_back({onex.scaled(constant), oney});
        return f;
    }

    Rational norm_sq() const {
        auto f = as_separable();
        return linesum::inner_product(f, f);
    }
};

inline SeparableF0 continuous_project(const RectUnion& A, const Rational& m,
                                      const Rational& n) {
    auto p = profiles(A, m, n);
    return {p.col.scaled(Rational(1) / n), p.row.scaled(Rational(1) / m),
            -p.measure / (m * n), m, n};
}

inline Rational inner_product(const SeparableF0& f, const SeparableFn& h) {
    return inner_product(f.as_separable(), h);
}

}  // namespace linesum
