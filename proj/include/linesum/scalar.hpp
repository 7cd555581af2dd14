#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include "linesum/errors.hpp"

namespace linesum {

using Rational = mpq_class;

template <class T>
inline constexpr bool is_exact_v =
    std::is_same_v<T, Rational> || std::is_integral_v<T>;

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }
inline double to_double(long x) { return static_cast<double>(x); }
inline double to_double(int x) { return static_cast<double>(x); }

inline Rational to_rational(const Rational& q) { return q; }
inline Rational to_rational(long x) { return Rational(x); }
inline Rational to_rational(int x) { return Rational(x); }

// "p/q" (or plain "p") as used in all JSON output of exact values.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: '" + s + "'");
    }
}

// True when q is an integer fitting long.
inline bool rational_is_integer(const Rational& q) {
    return q.get_den() == 1;
}

inline long rational_to_long(const Rational& q) {
    if (!rational_is_integer(q))
        throw NonIntegerResult("expected integer, got " + rational_to_string(q));
    return q.get_num().get_si();
}

template <class U, class T>
U scalar_cast(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
        if constexpr (std::is_same_v<U, Rational>)
            return v;
        else if constexpr (std::is_floating_point_v<U>)
            return v.get_d();
        else
            return static_cast<U>(rational_to_long(v));
    } else {
        return U(v);
    }
}

// Nearest integer, halves away from zero; matches round() on the float path.
inline long nearest_long(const Rational& q) {
    mpz_class num2 = 2 * q.get_num();
    mpz_class den = q.get_den(), r;
    if (q >= 0) {
        mpz_fdiv_q(r.get_mpz_t(), mpz_class(num2 + den).get_mpz_t(),
                   mpz_class(2 * den).get_mpz_t());
    } else {
        mpz_cdiv_q(r.get_mpz_t(), mpz_class(num2 - den).get_mpz_t(),
                   mpz_class(2 * den).get_mpz_t());
    }
    return r.get_si();
}

inline long nearest_long(double x) { return std::lround(x); }

}  // namespace linesum
