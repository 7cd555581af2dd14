#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace linesum;
using test_helpers::Rng;

TEST_CASE("direction normalization") {
    CHECK_NOTHROW(Direction(1, 0));
    CHECK_NOTHROW(Direction(0, 1));
    CHECK_NOTHROW(Direction(3, -2));
    CHECK_THROWS_AS(Direction(2, 4), MalformedDirection);
    CHECK_THROWS_AS(Direction(-1, 1), MalformedDirection);
    CHECK_THROWS_AS(Direction(0, -1), MalformedDirection);
    CHECK_THROWS_AS(Direction(0, 2), MalformedDirection);
}

TEST_CASE("validate_direction_set") {
    auto r = validate_direction_set({Direction(1, 0), Direction(0, 1)}, 6, 5);
    CHECK(r.M == 1);
    CHECK(r.N == 1);

    // M=3 < 4 but N=3 is not < 3
    DirectionSet S{Direction(1, 0), Direction(0, 1), Direction(1, 1),
                   Direction(1, -1)};
    CHECK_THROWS_AS(validate_direction_set(S, 4, 3), InvalidDirectionSet);
    CHECK_NOTHROW(validate_direction_set(S, 4, 4));

    CHECK_THROWS_AS(
        validate_direction_set({Direction(1, 0), Direction(1, 0)}, 6, 5),
        MalformedDirection);
}

TEST_CASE("line sums of small grids") {
    Grid<long> g(2, 2, 0);
    g(0, 0) = 1;
    g(1, 1) = 1;
    auto t = compute_line_sums(g, {Direction(1, 0), Direction(0, 1)});
    CHECK(t.total == 2);
    CHECK(t.sums.at(Direction(1, 0)).at(0) == 1);
    CHECK(t.sums.at(Direction(1, 0)).at(1) == 1);
    CHECK(t.sums.at(Direction(0, 1)).at(0) == 1);
    CHECK(t.sums.at(Direction(0, 1)).at(-1) == 1);
}

TEST_CASE("zero grid has zero line sums") {
    Grid<long> g(4, 3, 0);
    auto t = compute_line_sums(g, {Direction(1, 0), Direction(0, 1),
                                   Direction(1, 1)});
    CHECK(t.total == 0);
    for (const auto& [d, row] : t.sums)
        for (const auto& [key, v] : row) CHECK(v == 0);
}

// First 6x5 binary grid displayed in the worked example (the
// left-hand solution).
static Grid<int> example_solution_a() {
    const int rows[5][6] = {{1, 1, 1, 1, 0, 1},
                            {1, 1, 1, 0, 1, 0},
                            {1, 1, 0, 1, 0, 0},
                            {1, 0, 1, 0, 0, 0},
                            {0, 1, 0, 0, 0, 0}};
    Grid<int> g(6, 5, 0);
    for (long j = 0; j < 5; ++j)
        for (long i = 0; i < 6; ++i) g(i, j) = rows[j][i];
    return g;
}

TEST_CASE("worked-example grid has row sums 5..1 and column sums 4,4,3,2,1,1") {
    auto g = example_solution_a().cast<long>();
    auto t = compute_line_sums(g, {Direction(1, 0), Direction(0, 1)});
    CHECK(t.total == 15);
    const long rows[5] = {5, 4, 3, 2, 1};
    const long cols[6] = {4, 4, 3, 2, 1, 1};
    for (long j = 0; j < 5; ++j) CHECK(t.sums.at(Direction(1, 0)).at(j) == rows[j]);
    for (long i = 0; i < 6; ++i) CHECK(t.sums.at(Direction(0, 1)).at(-i) == cols[i]);
}

TEST_CASE("line sums add up to the total in every direction") {
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        long m = 3 + rep % 4, n = 3 + (rep / 4) % 3;
        auto g = test_helpers::random_integer_grid(m, n, -4, 4, rng);
        for (const auto& S : {DirectionSet{Direction(1, 0), Direction(0, 1)},
                              DirectionSet{Direction(1, 1), Direction(1, -1)}}) {
            if (!S.is_valid_for(m, n)) continue;
            auto t = compute_line_sums(g, S);
            for (const auto& [d, row] : t.sums) {
                long s = 0;
                for (const auto& [key, v] : row) s += v;
                CHECK(s == t.total);
            }
        }
    }
}

TEST_CASE("compute_line_sums is linear") {
    Rng rng(11);
    DirectionSet S{Direction(1, 0), Direction(0, 1), Direction(1, 1)};
    for (int rep = 0; rep < 10; ++rep) {
        auto g1 = test_helpers::random_rational_grid(5, 4, rng);
        auto g2 = test_helpers::random_rational_grid(5, 4, rng);
        auto t1 = compute_line_sums(g1, S);
        auto t2 = compute_line_sums(g2, S);
        auto t12 = compute_line_sums(g1 + g2, S);
        for (const auto& [d, row] : t12.sums)
            for (const auto& [key, v] : row)
                CHECK(v == t1.sums.at(d).at(key) + t2.sums.at(d).at(key));
    }
}

TEST_CASE("dependency_count matches the exact rank oracle") {
    CHECK(dependency_count({Direction(1, 0), Direction(0, 1)}, 6, 5) == 1);
    CHECK(dependency_count({Direction(1, 0), Direction(0, 1), Direction(1, 1)},
                           4, 4) == 3);
    CHECK(dependency_count({Direction(1, 0), Direction(0, 1), Direction(1, 1),
                            Direction(1, -1)},
                           5, 5) == 7);

    for (auto [m, n] : std::vector<std::pair<long, long>>{{3, 3}, {4, 5}}) {
        for (const auto& S : test_helpers::all_valid_direction_sets(3, m, n)) {
            long lines = test_helpers::line_count(S, m, n);
            long rank = test_helpers::line_matrix_rank(S, m, n);
            CHECK(dependency_count(S, m, n) == lines - rank);
        }
    }
    // 6x6 has thousands of valid sets; check a fixed-seed sample
    auto sets66 = test_helpers::all_valid_direction_sets(3, 6, 6);
    Rng rng(1);
    std::shuffle(sets66.begin(), sets66.end(), rng);
    sets66.resize(std::min<std::size_t>(sets66.size(), 150));
    for (const auto& S : sets66) {
        long lines = test_helpers::line_count(S, 6, 6);
        long rank = test_helpers::line_matrix_rank(S, 6, 6);
        CHECK(dependency_count(S, 6, 6) == lines - rank);
    }
}

TEST_CASE("compatibility residual") {
    Rng rng(3);
    // consistent by construction
    auto g = test_helpers::random_integer_grid(5, 4, 0, 3, rng);
    DirectionSet S{Direction(1, 0), Direction(0, 1), Direction(1, -1)};
    auto t = compute_line_sums(g, S).cast<Rational>();
    CHECK(compatibility_residual_sq(t, S, 5, 4) == 0);
    CHECK(compatibility_residual(t.cast<double>(), S, 5, 4) < 1e-10);

    // break the row-total = column-total dependency
    DirectionSet simple{Direction(1, 0), Direction(0, 1)};
    auto t2 = compute_line_sums(g, simple).cast<Rational>();
    t2.sums.at(Direction(1, 0)).at(0) += 1;
    CHECK(compatibility_residual_sq(t2, simple, 5, 4) > 0);
    CHECK(compatibility_residual(t2.cast<double>(), simple, 5, 4) > 1e-3);
}
