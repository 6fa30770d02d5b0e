#include "pilegame/steps.hpp"

#include <stdexcept>
#include <string>

namespace pilegame {

const Rational& StepsTable::expected_steps(std::size_t n) const {
    if (n < 1 || n > n_max) throw std::out_of_range("E(Z_n) defined for 1 <= n <= " + std::to_string(n_max));
    return ez[n];
}

const Rational& StepsTable::expected_increment(std::size_t n) const {
    if (n < 2 || n > n_max) throw std::out_of_range("E(Q_n) defined for 2 <= n <= " + std::to_string(n_max));
    return eq[n];
}

StepsTable expected_steps(std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("expected_steps requires n_max >= 1");
    StepsTable t;
    t.n_max = n_max;
    t.ez.assign(n_max + 1, Rational(0));
    t.eq.assign(n_max + 1, Rational(0));

    t.ez[1] = Rational(1);
    if (n_max >= 2) t.ez[2] = Rational(1);

    Rational prefix(0);  // sum_{k=1}^{n-2} E(Z_k)
    for (std::size_t n = 3; n <= n_max; ++n) {
        prefix += t.ez[n - 2];
        t.ez[n] = Rational(1) + prefix / Rational(static_cast<long>(n));
    }
    for (std::size_t n = 2; n <= n_max; ++n) t.eq[n] = t.ez[n] - t.ez[n - 1];
    return t;
}

std::vector<Rational> q_sequence(std::size_t n_max) {
    if (n_max < 2) throw std::invalid_argument("q_sequence requires n_max >= 2");
    std::vector<Rational> eq(n_max + 1, Rational(0));
    for (std::size_t n = 3; n <= n_max; ++n) eq[n] = (Rational(1) - eq[n - 1]) / Rational(static_cast<long>(n));
    return eq;
}

}  // namespace pilegame
