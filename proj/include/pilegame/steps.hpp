#pragma once

#include <cstddef>
#include <vector>

#include "pilegame/rational.hpp"

namespace pilegame {

/*
 * Expected number of moves the random player makes, E(Z_n), and the
 * consecutive differences E(Q_n) = E(Z_n) - E(Z_{n-1}).
 *
 * Storage is indexed by n directly: ez[0] and eq[0], eq[1] are unused
 * placeholders (zero) so that ez[n] / eq[n] read naturally.
 */
struct StepsTable {
    std::size_t n_max = 1;
    std::vector<Rational> ez;  // valid for 1..n_max
    std::vector<Rational> eq;  // valid for 2..n_max

    const Rational& expected_steps(std::size_t n) const;
    const Rational& expected_increment(std::size_t n) const;
};

// E(Z_n) = 1 + (1/n) sum_{k=1}^{n-2} E(Z_k) for n >= 3, E(Z_1) = E(Z_2) = 1.
StepsTable expected_steps(std::size_t n_max);

// E(Q_n) = (1 - E(Q_{n-1})) / n from E(Q_2) = 0.  Same indexing as StepsTable::eq.
std::vector<Rational> q_sequence(std::size_t n_max);

}  // namespace pilegame
