#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pilegame/rational.hpp"

namespace pilegame {

enum class Method { recursive, telescoping, closed_form, gf };

std::string_view to_string(Method m);
/// Accepts the CLI spellings ("closed-form") as well as "closed_form".
Method parse_method(std::string_view s);

/*
 * R_n (probability that the random player wins from a pile of n) for
 * n = 0..n_max.  D_n is the complement.
 */
struct WinTable {
    std::size_t n_max = 0;
    std::vector<ExactProb> r;
    Method method = Method::recursive;

    const ExactProb& random_wins(std::size_t n) const { return r.at(n); }
    ExactProb det_wins(std::size_t n) const { return r.at(n).complement(); }
};

struct DerangementTable {
    std::size_t n_max = 0;
    std::vector<BigInt> d;
    std::vector<BigInt> factorial;
};

struct LimitGap {
    double d_n_float;
    double gap;
    Rational bound;  // 1/(n+1)!
};

// R_n = (R_{n-2} + (n-1) R_{n-1}) / n for n >= 2, with R_0 = 0, R_1 = 1.
WinTable solve_recursive(std::size_t n_max);

// Increments a_n = R_n - R_{n-1} = (-1)^{n+1}/n!, summed from R_0 = 0.
WinTable solve_telescoping(std::size_t n_max);
Rational telescoping_increment(std::size_t n);

ExactProb closed_form(std::size_t n);
WinTable solve_closed_form(std::size_t n_max);

/// d_n = (n-1)(d_{n-1} + d_{n-2}), d_0 = 1, d_1 = 0.
DerangementTable derangements(std::size_t n_max);
ExactProb derangement_prob(std::size_t n, const DerangementTable& table);

/*
 * Coefficients of (sum_n x^n) * (1 - sum_n (-1)^n x^n / n!), obtained by
 * truncated Cauchy product of the two factor series.
 */
std::vector<ExactProb> gf_coefficients(std::size_t n_max);
WinTable solve_gf(std::size_t n_max);

WinTable solve(Method m, std::size_t n_max);

/// Distance of D_n from 1/e, with the alternating-series remainder bound.
LimitGap gap_to_limit(std::size_t n, const WinTable& table);

/// Float slack allowed on top of the exact bound in gap_to_limit checks.
inline constexpr double kLimitFloatSlack = 1.0 / (1ULL << 48);

}  // namespace pilegame
