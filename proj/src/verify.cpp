#include "pilegame/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace pilegame {

namespace {

// Runs `pred(n)` for n in [lo, hi]; the first failing n is named in the detail.
CheckResult check_range(std::string id, std::size_t lo, std::size_t hi,
                        const std::function<std::string(std::size_t)>& pred) {
    CheckResult c{std::move(id), true, {}};
    for (std::size_t n = lo; n <= hi; ++n) {
        if (std::string why = pred(n); !why.empty()) {
            c.passed = false;
            c.detail = "n=" + std::to_string(n) + ": " + why;
            return c;
        }
    }
    c.detail = "n=" + std::to_string(lo) + ".." + std::to_string(hi);
    return c;
}

std::string mismatch(const Rational& a, const Rational& b) {
    return a == b ? std::string{} : a.to_string() + " != " + b.to_string();
}

CheckResult compare_tables(const std::string& id, const WinTable& a, const WinTable& b, std::size_t n_max) {
    return check_range(id, 0, n_max, [&](std::size_t n) { return mismatch(a.r.at(n).value(), b.r.at(n).value()); });
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyInputs build_verify_inputs(std::size_t n_max, std::size_t oracle_max) {
    if (oracle_max > kOracleMaxMemoized)
        throw std::out_of_range("oracle-max " + std::to_string(oracle_max) + " exceeds limit " +
                                std::to_string(kOracleMaxMemoized));
    const std::size_t span = std::max({n_max, oracle_max, std::size_t{2}});

    VerifyInputs in;
    in.n_max = n_max;
    in.oracle_max = oracle_max;
    in.recursive = solve_recursive(span);
    in.telescoping = solve_telescoping(span);
    in.closed = solve_closed_form(span);
    in.gf = solve_gf(span);
    in.derange = derangements(span);
    in.steps = expected_steps(span);
    in.q = q_sequence(span);
    for (std::size_t n = 0; n <= oracle_max; ++n) in.oracle.push_back(oracle_evaluate(n, OracleMode::memoized));
    for (std::size_t n = 0; n <= std::min(oracle_max, kOracleMaxExhaustive); ++n)
        in.oracle_exhaustive.push_back(oracle_evaluate(n, OracleMode::exhaustive));
    return in;
}

VerifyReport run_checks(const VerifyInputs& in) {
    VerifyReport rep;
    auto& out = rep.checks;
    const std::size_t n_max = in.n_max;
    const auto& rec = in.recursive;

    out.push_back(check_range("base-cases", 0, 2, [&](std::size_t n) {
        static const Rational expected[] = {Rational(0), Rational(1), Rational(1, 2)};
        return mismatch(rec.r.at(n).value(), expected[n]);
    }));

    out.push_back(compare_tables("recursive-vs-telescoping", rec, in.telescoping, n_max));
    out.push_back(compare_tables("recursive-vs-closed-form", rec, in.closed, n_max));
    out.push_back(compare_tables("recursive-vs-gf", rec, in.gf, n_max));
    out.push_back(compare_tables("telescoping-vs-closed-form", in.telescoping, in.closed, n_max));
    out.push_back(compare_tables("telescoping-vs-gf", in.telescoping, in.gf, n_max));
    out.push_back(compare_tables("closed-form-vs-gf", in.closed, in.gf, n_max));

    out.push_back(check_range("dn-identity", 0, n_max, [&](std::size_t n) {
        return mismatch(rec.det_wins(n).value(), Rational(in.derange.d.at(n), in.derange.factorial.at(n)));
    }));

    out.push_back(check_range("telescoping-difference", 1, n_max, [&](std::size_t n) {
        return mismatch(rec.r.at(n).value() - rec.r.at(n - 1).value(), telescoping_increment(n));
    }));

    out.push_back(check_range("alternating-bound", 0, n_max, [&](std::size_t n) -> std::string {
        const Rational bound(BigInt(1), factorial(static_cast<unsigned>(n + 1)));
        const Rational dn = rec.det_wins(n).value();
        for (std::size_t m = n + 1; m <= n_max; ++m) {
            if ((dn - rec.det_wins(m).value()).abs() > bound)
                return "|D_n - D_" + std::to_string(m) + "| exceeds 1/(n+1)!";
        }
        return {};
    }));

    out.push_back(check_range("limit-gap", 0, std::min<std::size_t>(n_max, 20), [&](std::size_t n) -> std::string {
        const LimitGap g = gap_to_limit(n, rec);
        if (g.gap <= g.bound.to_double() + kLimitFloatSlack) return {};
        return "gap " + std::to_string(g.gap) + " exceeds bound";
    }));

    out.push_back(check_range("oracle-prob", 0, in.oracle_max, [&](std::size_t n) {
        return mismatch(in.oracle.at(n).d_win_prob.value(), rec.det_wins(n).value());
    }));
    out.push_back(check_range("oracle-prob-exhaustive", 0, in.oracle_exhaustive.size() - 1, [&](std::size_t n) {
        return mismatch(in.oracle_exhaustive.at(n).d_win_prob.value(), rec.det_wins(n).value());
    }));
    out.push_back(check_range("oracle-steps", 1, in.oracle_max, [&](std::size_t n) {
        return mismatch(in.oracle.at(n).expected_r_steps, in.steps.ez.at(n));
    }));
    out.push_back(check_range("oracle-steps-exhaustive", 1, in.oracle_exhaustive.size() - 1, [&](std::size_t n) {
        return mismatch(in.oracle_exhaustive.at(n).expected_r_steps, in.steps.ez.at(n));
    }));

    out.push_back(check_range("steps-vs-q", 2, std::max<std::size_t>(n_max, 2), [&](std::size_t n) {
        return mismatch(in.q.at(n), in.steps.ez.at(n) - in.steps.ez.at(n - 1));
    }));
    out.push_back(check_range("q-recursion", 3, std::max<std::size_t>(n_max, 2), [&](std::size_t n) {
        return mismatch(Rational(static_cast<long>(n)) * in.q.at(n), Rational(1) - in.q.at(n - 1));
    }));
    out.push_back(check_range("q-positive", 3, std::max<std::size_t>(n_max, 2), [&](std::size_t n) {
        return in.q.at(n).sign() > 0 ? std::string{} : "E(Q_n) = " + in.q.at(n).to_string() + " not positive";
    }));
    return rep;
}

void print_report(const VerifyReport& report, std::ostream& os) {
    for (const auto& c : report.checks) {
        if (c.passed)
            os << "PASS " << c.id << " (" << c.detail << ")\n";
        else
            os << "FAIL " << c.id << ": " << c.detail << "\n";
    }
    os << (report.all_passed() ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << "\n";
}

}  // namespace pilegame
