#pragma once

#include <cstddef>

#include "pilegame/rational.hpp"

namespace pilegame {

/*
 * Exhaustive evaluation of the game tree straight from the move rules:
 * every R node branches over k in {1..m} with weight 1/m, every D node is a
 * single forced move.  Nothing here uses the closed-form recursions.
 */
enum class OracleMode {
    memoized,    // caches node values keyed by (pile, player to move)
    exhaustive,  // walks every root-to-leaf path, summing path weights
};

inline constexpr std::size_t kOracleMaxMemoized = 14;
inline constexpr std::size_t kOracleMaxExhaustive = 10;

std::size_t oracle_depth_limit(OracleMode mode);

struct OracleResult {
    std::size_t n = 0;
    ExactProb d_win_prob;
    Rational expected_r_steps;  // zero for n == 0
};

OracleResult oracle_evaluate(std::size_t n, OracleMode mode = OracleMode::memoized);

/// P(D wins) from a pile of n; 1 for n == 0 by convention.
ExactProb oracle_win_prob(std::size_t n, OracleMode mode = OracleMode::memoized);

Rational oracle_expected_steps(std::size_t n, OracleMode mode = OracleMode::memoized);

}  // namespace pilegame
