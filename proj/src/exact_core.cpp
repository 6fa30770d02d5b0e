#include "pilegame/exact_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pilegame {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::recursive: return "recursive";
        case Method::telescoping: return "telescoping";
        case Method::closed_form: return "closed-form";
        case Method::gf: return "gf";
    }
    return "unknown";
}

Method parse_method(std::string_view s) {
    if (s == "recursive") return Method::recursive;
    if (s == "telescoping") return Method::telescoping;
    if (s == "closed-form" || s == "closed_form") return Method::closed_form;
    if (s == "gf") return Method::gf;
    throw std::invalid_argument("unknown method: " + std::string(s));
}

WinTable solve_recursive(std::size_t n_max) {
    WinTable t{n_max, {}, Method::recursive};
    t.r.reserve(n_max + 1);
    t.r.emplace_back(Rational(0));
    if (n_max >= 1) t.r.emplace_back(Rational(1));
    for (std::size_t n = 2; n <= n_max; ++n) {
        const auto& r2 = t.r[n - 2].value();
        const auto& r1 = t.r[n - 1].value();
        Rational next = (r2 + Rational(static_cast<long>(n - 1)) * r1) / Rational(static_cast<long>(n));
        t.r.emplace_back(std::move(next));
    }
    return t;
}

Rational telescoping_increment(std::size_t n) {
    if (n == 0) throw std::invalid_argument("telescoping increment defined for n >= 1");
    long sign = (n % 2 == 1) ? 1 : -1;
    return Rational(BigInt(sign), factorial(static_cast<unsigned>(n)));
}

WinTable solve_telescoping(std::size_t n_max) {
    WinTable t{n_max, {}, Method::telescoping};
    t.r.reserve(n_max + 1);
    Rational acc(0);
    t.r.emplace_back(acc);
    for (std::size_t n = 1; n <= n_max; ++n) {
        acc += telescoping_increment(n);
        t.r.emplace_back(acc);
    }
    return t;
}

ExactProb closed_form(std::size_t n) {
    Rational partial(0);
    BigInt fact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) fact *= static_cast<unsigned long>(k);
        partial += Rational(BigInt(k % 2 == 0 ? 1 : -1), fact);
    }
    return ExactProb(Rational(1) - partial);
}

WinTable solve_closed_form(std::size_t n_max) {
    WinTable t{n_max, {}, Method::closed_form};
    t.r.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) t.r.push_back(closed_form(n));
    return t;
}

DerangementTable derangements(std::size_t n_max) {
    DerangementTable t;
    t.n_max = n_max;
    t.d.reserve(n_max + 1);
    t.factorial.reserve(n_max + 1);
    t.d.emplace_back(1);
    t.factorial.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        t.factorial.emplace_back(t.factorial.back() * static_cast<unsigned long>(n));
        if (n == 1) {
            t.d.emplace_back(0);
        } else {
            t.d.emplace_back(BigInt(static_cast<unsigned long>(n - 1)) * (t.d[n - 1] + t.d[n - 2]));
        }
    }
    return t;
}

ExactProb derangement_prob(std::size_t n, const DerangementTable& table) {
    if (n > table.n_max || n >= table.d.size())
        throw std::out_of_range("derangement_prob: n=" + std::to_string(n) + " exceeds table n_max=" +
                                std::to_string(table.n_max));
    return ExactProb(Rational(table.d[n], table.factorial[n]));
}

std::vector<ExactProb> gf_coefficients(std::size_t n_max) {
    // f = 1 + x + x^2 + ...          (that is -1/(x-1))
    // g = 1 - sum (-1)^l x^l / l!    (that is 1 - e^{-x}); g_0 = 0
    std::vector<Rational> f(n_max + 1, Rational(1));
    std::vector<Rational> g(n_max + 1);
    BigInt fact = 1;
    for (std::size_t l = 1; l <= n_max; ++l) {
        fact *= static_cast<unsigned long>(l);
        g[l] = Rational(BigInt(l % 2 == 0 ? -1 : 1), fact);
    }

    std::vector<ExactProb> c;
    c.reserve(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) {
        Rational sum(0);
        for (std::size_t j = 0; j <= k; ++j) sum += f[k - j] * g[j];
        c.emplace_back(std::move(sum));
    }
    return c;
}

WinTable solve_gf(std::size_t n_max) { return WinTable{n_max, gf_coefficients(n_max), Method::gf}; }

WinTable solve(Method m, std::size_t n_max) {
    switch (m) {
        case Method::recursive: return solve_recursive(n_max);
        case Method::telescoping: return solve_telescoping(n_max);
        case Method::closed_form: return solve_closed_form(n_max);
        case Method::gf: return solve_gf(n_max);
    }
    throw std::invalid_argument("unknown method");
}

LimitGap gap_to_limit(std::size_t n, const WinTable& table) {
    if (n > table.n_max || n >= table.r.size())
        throw std::out_of_range("gap_to_limit: n=" + std::to_string(n) + " exceeds table n_max=" +
                                std::to_string(table.n_max));
    const double d = table.det_wins(n).to_double();
    const double e_inv = std::exp(-1.0);
    return LimitGap{d, std::fabs(d - e_inv), Rational(BigInt(1), factorial(static_cast<unsigned>(n + 1)))};
}

}  // namespace pilegame
