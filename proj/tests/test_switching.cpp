#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace linesum;
using test_helpers::Rng;

TEST_CASE("direction polynomials") {
    CHECK(direction_polynomial(Direction(1, 0)) ==
          BivariatePolynomial::monomial(1, 0, 1) +
              BivariatePolynomial::monomial(0, 0, -1));
    CHECK(direction_polynomial(Direction(0, 1)) ==
          BivariatePolynomial::monomial(0, 1, 1) +
              BivariatePolynomial::monomial(0, 0, -1));
    CHECK(direction_polynomial(Direction(1, 1)) ==
          BivariatePolynomial::monomial(1, 1, 1) +
              BivariatePolynomial::monomial(0, 0, -1));
    // b<0: the binomial x^a - y^|b| (its 2-cell grid sums to zero along (a,b))
    CHECK(direction_polynomial(Direction(1, -1)) ==
          BivariatePolynomial::monomial(1, 0, 1) +
              BivariatePolynomial::monomial(0, 1, -1));
    auto g = polynomial_grid(direction_polynomial(Direction(1, -1)), 3, 3);
    auto t = compute_line_sums(g, DirectionSet{Direction(1, -1), Direction(1, 0)});
    for (const auto& [key, v] : t.sums.at(Direction(1, -1))) CHECK(v == 0);
}

TEST_CASE("switching polynomial basics") {
    auto p = switching_polynomial({Direction(1, 0), Direction(0, 1)});
    CHECK(p.coefficient(0, 0) == 1);
    CHECK(p.coefficient(1, 0) == -1);
    CHECK(p.coefficient(0, 1) == -1);
    CHECK(p.coefficient(1, 1) == 1);
    CHECK(p.degx() == 1);
    CHECK(p.degy() == 1);

    CHECK(switching_polynomial({Direction(1, 0)}) ==
          direction_polynomial(Direction(1, 0)));

    DirectionSet S{Direction(1, 0), Direction(0, 1), Direction(1, 1),
                   Direction(1, -1)};
    auto q = switching_polynomial(S);
    CHECK(q.degx() == S.M());
    CHECK(q.degy() == S.N());
    CHECK(q.weight() == 8);
}

TEST_CASE("weight_R values") {
    CHECK(weight_R({Direction(1, 0), Direction(0, 1)}) == 4);
    CHECK(weight_R({Direction(1, 0), Direction(0, 1), Direction(1, 1),
                    Direction(1, -1)}) == 8);
    CHECK(weight_R({Direction(1, 0), Direction(0, 1), Direction(1, 1),
                    Direction(1, -1), Direction(2, 1), Direction(2, -1),
                    Direction(1, 2), Direction(1, -2)}) == 24);
    // R(S) <= 2^k
    for (const auto& S : test_helpers::all_valid_direction_sets(3, 5, 5))
        CHECK(weight_R(S) <= (1L << S.size()));
}

TEST_CASE("switching element basics") {
    auto e = switching_element(0, 0, {Direction(1, 0), Direction(0, 1)}, 2, 2);
    CHECK(e(0, 0) == 1);
    CHECK(e(1, 0) == -1);
    CHECK(e(0, 1) == -1);
    CHECK(e(1, 1) == 1);
    CHECK_THROWS_AS(
        switching_element(1, 0, {Direction(1, 0), Direction(0, 1)}, 2, 2),
        IndexOutOfRange);
}

TEST_CASE("every switching element has zero line sums and corner +-1") {
    for (auto [m, n] : std::vector<std::pair<long, long>>{{4, 4}, {6, 5}}) {
        for (const auto& S : test_helpers::all_valid_direction_sets(2, m, n)) {
            auto basis = SwitchingBasis::build(S, m, n);
            CHECK(basis.dim() == (m - S.M()) * (n - S.N()));
            for (std::size_t k = 0; k < basis.elements.size(); ++k) {
                const auto& e = basis.elements[k];
                auto t = compute_line_sums(e, S);
                for (const auto& [d, row] : t.sums)
                    for (const auto& [key, v] : row) CHECK(v == 0);
                auto [ci, cj] = basis.corners[k];
                CHECK(std::abs(e(ci, cj)) == 1);
                // norm^2 equals R(S): shifting preserves the coefficients
                CHECK(e.norm_sq() == basis.weight);
            }
        }
    }
}

TEST_CASE("bottom_left_corners") {
    auto K = bottom_left_corners({Direction(1, 0), Direction(0, 1)}, 3, 3);
    REQUIRE(K.size() == 4);
    CHECK(K[0] == std::pair<long, long>(0, 0));
    CHECK(K[1] == std::pair<long, long>(0, 1));
    CHECK(K[2] == std::pair<long, long>(1, 0));
    CHECK(K[3] == std::pair<long, long>(1, 1));

    for (auto [m, n] : std::vector<std::pair<long, long>>{{4, 4}, {6, 6}}) {
        for (const auto& S : test_helpers::all_valid_direction_sets(3, m, n)) {
            auto corners = bottom_left_corners(S, m, n);
            CHECK(static_cast<long>(corners.size()) ==
                  (m - S.M()) * (n - S.N()));
            CHECK(std::is_sorted(corners.begin(), corners.end()));
            CHECK(std::adjacent_find(corners.begin(), corners.end()) ==
                  corners.end());
        }
    }
}

TEST_CASE("decompose round-trip") {
    Rng rng(17);
    DirectionSet S{Direction(1, 0), Direction(0, 1), Direction(1, 1)};
    auto basis = SwitchingBasis::build(S, 5, 5);

    SECTION("basis element and zero grid") {
        auto d0 = decompose(basis.elements[0], basis);
        CHECK(d0.coefficients[0] == 1);
        for (std::size_t k = 1; k < d0.coefficients.size(); ++k)
            CHECK(d0.coefficients[k] == 0);
        auto dz = decompose(Grid<long>(5, 5, 0), basis);
        for (const auto& c : dz.coefficients) CHECK(c == 0);
    }

    SECTION("random rational combinations recover exactly") {
        for (int rep = 0; rep < 50; ++rep) {
            Decomposition<Rational> dec;
            dec.offsets = basis.offsets;
            for (long k = 0; k < basis.dim(); ++k)
                dec.coefficients.push_back(test_helpers::random_rational(rng));
            auto g = recompose(dec, basis);
            auto back = decompose(g, basis);
            CHECK(back.coefficients == dec.coefficients);
        }
    }

    SECTION("nonzero combinations decompose to nonzero") {
        Decomposition<Rational> dec;
        dec.offsets = basis.offsets;
        dec.coefficients.assign(basis.dim(), Rational(0));
        dec.coefficients[3] = Rational(2, 7);
        auto back = decompose(recompose(dec, basis), basis);
        CHECK(back.coefficients == dec.coefficients);
    }

    SECTION("rejects grids with nonzero line sums") {
        Grid<Rational> g(5, 5, Rational(0));
        g(2, 2) = 1;
        CHECK_THROWS_AS(decompose(g, basis), NotZeroSum);
    }
}

TEST_CASE("reconstruct_from_corners") {
    Rng rng(23);
    DirectionSet S{Direction(1, 0), Direction(0, 1), Direction(1, -1)};
    long m = 5, n = 4;
    auto corners = bottom_left_corners(S, m, n);

    SECTION("inverts (read corners, compute sums)") {
        for (int rep = 0; rep < 20; ++rep) {
            auto g = test_helpers::random_rational_grid(m, n, rng);
            auto t = compute_line_sums(g, S);
            std::map<std::pair<long, long>, Rational> vals;
            for (const auto& [ci, cj] : corners) vals[{ci, cj}] = g(ci, cj);
            CHECK(reconstruct_from_corners(vals, t, S, m, n) == g);
        }
    }

    SECTION("zero sums, zero corners give the zero grid") {
        auto t = compute_line_sums(Grid<Rational>(m, n, Rational(0)), S);
        std::map<std::pair<long, long>, Rational> vals;
        for (const auto& c : corners) vals[c] = 0;
        CHECK(reconstruct_from_corners(vals, t, S, m, n) ==
              Grid<Rational>(m, n, Rational(0)));
    }

    SECTION("integer sums and corners give an integer grid") {
        for (int rep = 0; rep < 20; ++rep) {
            auto g = test_helpers::random_integer_grid(m, n, -3, 3, rng);
            auto t = compute_line_sums(g, S).cast<Rational>();
            std::map<std::pair<long, long>, Rational> vals;
            std::uniform_int_distribution<long> val(-4, 4);
            for (const auto& c : corners) vals[c] = val(rng);
            auto rec = reconstruct_from_corners(vals, t, S, m, n);
            for (long j = 0; j < n; ++j)
                for (long i = 0; i < m; ++i)
                    CHECK(rational_is_integer(rec(i, j)));
            // sums and corners are met
            auto ts = compute_line_sums(rec, S);
            for (const auto& [d, row] : ts.sums)
                for (const auto& [key, v] : row)
                    CHECK(v == t.sums.at(d).at(key));
            for (const auto& c : corners) CHECK(rec(c.first, c.second) == vals[c]);
        }
    }

    SECTION("incompatible sums are rejected") {
        auto g = test_helpers::random_integer_grid(m, n, 0, 2, rng);
        auto t = compute_line_sums(g, S).cast<Rational>();
        t.sums.at(Direction(1, 0)).at(0) += 1;
        std::map<std::pair<long, long>, Rational> vals;
        for (const auto& c : corners) vals[c] = 0;
        CHECK_THROWS_AS(reconstruct_from_corners(vals, t, S, m, n),
                        IncompatibleLineSums);
    }
}
