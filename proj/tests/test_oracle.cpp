#include "doctest.h"
#include "pilegame/exact_core.hpp"
#include "pilegame/oracle.hpp"

using namespace pilegame;

TEST_CASE("oracle win probability examples") {
    CHECK(oracle_win_prob(0).value() == Rational(1));
    CHECK(oracle_win_prob(1).value() == Rational(0));
    CHECK(oracle_win_prob(2).value() == Rational(1, 2));
    CHECK(oracle_win_prob(5).value() == Rational(11, 30));
    CHECK(oracle_win_prob(5).value() == Rational(44, 120));
}

TEST_CASE("oracle expected steps examples") {
    CHECK(oracle_expected_steps(1) == Rational(1));
    CHECK(oracle_expected_steps(2) == Rational(1));
    CHECK(oracle_expected_steps(4) == Rational(3, 2));
    CHECK_THROWS_AS(oracle_expected_steps(0), std::invalid_argument);
}

TEST_CASE("memoized and exhaustive modes agree") {
    for (std::size_t n = 0; n <= kOracleMaxExhaustive; ++n) {
        const auto a = oracle_evaluate(n, OracleMode::memoized);
        const auto b = oracle_evaluate(n, OracleMode::exhaustive);
        CHECK(a.d_win_prob == b.d_win_prob);
        CHECK(a.expected_r_steps == b.expected_r_steps);
    }
}

TEST_CASE("oracle equals the analytic D_n") {
    const auto t = solve_recursive(14);
    for (std::size_t n = 0; n <= 14; ++n) CHECK(oracle_win_prob(n) == t.det_wins(n));
}

TEST_CASE("depth limits") {
    CHECK(oracle_depth_limit(OracleMode::memoized) == 14);
    CHECK(oracle_depth_limit(OracleMode::exhaustive) == 10);
    CHECK_THROWS_AS(oracle_win_prob(15), std::out_of_range);
    CHECK_THROWS_AS(oracle_win_prob(11, OracleMode::exhaustive), std::out_of_range);
}
