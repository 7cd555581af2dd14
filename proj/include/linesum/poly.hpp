#pragma once

#include <cstdio>
#include <map>
#include <utility>

#include "linesum/grid.hpp"

namespace linesum {

// Sparse bivariate polynomial with integer coefficients, keyed by (i,j)
// exponents of x^i y^j. F_S has at most 2^k terms, so sparse convolution
// is all we need.
class BivariatePolynomial {
public:
    using Key = std::pair<long, long>;

    BivariatePolynomial() = default;

    static BivariatePolynomial monomial(long i, long j, long c) {
        BivariatePolynomial p;
        if (c != 0) p.coeffs_[{i, j}] = c;
        return p;
    }

    const std::map<Key, long>& coefficients() const { return coeffs_; }

    long coefficient(long i, long j) const {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? 0 : it->second;
    }

    long degx() const {
        long d = 0;
        for (const auto& [k, c] : coeffs_) d = std::max(d, k.first);
        return d;
    }
    long degy() const {
        long d = 0;
        for (const auto& [k, c] : coeffs_) d = std::max(d, k.second);
        return d;
    }

    BivariatePolynomial operator*(const BivariatePolynomial& o) const {
        BivariatePolynomial r;
        for (const auto& [ka, ca] : coeffs_)
            for (const auto& [kb, cb] : o.coeffs_) {
                Key k{ka.first + kb.first, ka.second + kb.second};
                long& c = r.coeffs_[k];
                c += ca * cb;
                if (c == 0) r.coeffs_.erase(k);
            }
        return r;
    }

    BivariatePolynomial operator+(const BivariatePolynomial& o) const {
        BivariatePolynomial r = *this;
        for (const auto& [k, c] : o.coeffs_) {
            long& rc = r.coeffs_[k];
            rc += c;
            if (rc == 0) r.coeffs_.erase(k);
        }
        return r;
    }

    bool operator==(const BivariatePolynomial&) const = default;

    // Sum of squared coefficients.
    long weight() const {
        long s = 0;
        for (const auto& [k, c] : coeffs_) s += c * c;
        return s;
    }

private:
    std::map<Key, long> coeffs_;
};

// f_{a,b}: the polynomial factor attached to a direction. For b<0 the
// factor is x^a - y^{|b|}; its coefficient grid has zero line sums along
// (a,b), which a single monomial cannot have.
namespace detail {
// One-shot stderr note: the binomial form x^a - y^{|b|} for b<0 is not
// the monomial some references display, but it is the factor with zero
// line sums along (a,b).
inline void note_negative_b() {
    static bool noted = false;
    if (!noted) {
        noted = true;
        std::fputs(
            "note: direction with b<0 uses factor x^a - y^|b| "
            "(zero-line-sum binomial form)\n",
            stderr);
    }
}
}  // namespace detail

inline BivariatePolynomial direction_polynomial(const Direction& d) {
    d.validate();
    if (d.b < 0) detail::note_negative_b();
    if (d.a == 1 && d.b == 0)
        return BivariatePolynomial::monomial(1, 0, 1) +
               BivariatePolynomial::monomial(0, 0, -1);
    if (d.a == 0 && d.b == 1)
        return BivariatePolynomial::monomial(0, 1, 1) +
               BivariatePolynomial::monomial(0, 0, -1);
    if (d.b > 0)
        return BivariatePolynomial::monomial(d.a, d.b, 1) +
               BivariatePolynomial::monomial(0, 0, -1);
    return BivariatePolynomial::monomial(d.a, 0, 1) +
           BivariatePolynomial::monomial(0, -d.b, -1);
}

// F_S: product of the direction polynomials; degx = M, degy = N.
inline BivariatePolynomial switching_polynomial(const DirectionSet& S) {
    if (S.directions.empty())
        throw InvalidDirectionSet("empty direction set");
    S.check_distinct();
    BivariatePolynomial p = BivariatePolynomial::monomial(0, 0, 1);
    for (const auto& d : S.directions) p = p * direction_polynomial(d);
    return p;
}

// R(S) = sum of F_S coefficients squared.
inline long weight_R(const DirectionSet& S) {
    return switching_polynomial(S).weight();
}

}  // namespace linesum
