// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pilegame/cli.hpp"
#include "pilegame/exact_core.hpp"
#include "pilegame/oracle.hpp"
#include "pilegame/simulator.hpp"
#include "pilegame/steps.hpp"
#include "pilegame/verify.hpp"

using namespace pilegame;

namespace {

constexpr std::size_t kExactMax = 200;
constexpr std::size_t kOracleMax = 12;
constexpr std::size_t kOracleNoMemoMax = 10;
constexpr std::size_t kFloatGapMax = 20;
constexpr std::uint64_t kMcTrials = 1000000;
constexpr std::uint64_t kMcSeed = 42;
constexpr double kSigmas = 5.0;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(std::string why) {
        if (passed) detail = std::move(why);
        passed = false;
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;  // stated runtime budget, 0 = none
    std::function<Outcome()> body;
};

int cli_call(const std::vector<std::string>& args, std::string& out, const cli::Hooks& hooks = {}) {
    std::ostringstream o, e;
    int code = cli::run(args, o, e, hooks);
    out = o.str();
    return code;
}

Outcome cross_method() {
    Outcome o;
    const auto rec = solve_recursive(kExactMax);
    const auto tel = solve_telescoping(kExactMax);
    const auto cf = solve_closed_form(kExactMax);
    const auto gf = gf_coefficients(kExactMax);
    for (std::size_t n = 0; n <= kExactMax; ++n) {
        const auto& r = rec.r[n];
        if (!(tel.r[n] == r && cf.r[n] == r && gf[n] == r && closed_form(n) == r))
            o.fail("methods disagree at n=" + std::to_string(n));
    }
    if (o.passed) o.detail = "4 methods identical for n=0.." + std::to_string(kExactMax);
    return o;
}

Outcome derangement_identity() {
    Outcome o;
    const auto rec = solve_recursive(kExactMax);
    const auto d = derangements(kExactMax);
    for (std::size_t n = 0; n <= kExactMax; ++n)
        if (rec.det_wins(n) != derangement_prob(n, d)) o.fail("1 - R_n != d_n/n! at n=" + std::to_string(n));
    if (o.passed) o.detail = "d_200 has " + std::to_string(d.d[kExactMax].get_str().size()) + " digits";
    return o;
}

Outcome base_cases() {
    Outcome o;
    const auto rec = solve_recursive(2);
    if (rec.r[0].value() != Rational(0)) o.fail("R_0 = " + rec.r[0].value().to_string());
    if (rec.r[1].value() != Rational(1)) o.fail("R_1 = " + rec.r[1].value().to_string());
    if (rec.r[2].value() != Rational(1, 2)) o.fail("R_2 = " + rec.r[2].value().to_string());
    if (o.passed) o.detail = "R_0=0 R_1=1 R_2=1/2";
    return o;
}

Outcome oracle_probabilities() {
    Outcome o;
    const auto rec = solve_recursive(kOracleMax);
    for (std::size_t n = 0; n <= kOracleMax; ++n)
        if (oracle_win_prob(n, OracleMode::memoized) != rec.det_wins(n))
            o.fail("memoized oracle differs at n=" + std::to_string(n));
    for (std::size_t n = 0; n <= kOracleNoMemoMax; ++n)
        if (oracle_win_prob(n, OracleMode::exhaustive) != rec.det_wins(n))
            o.fail("exhaustive oracle differs at n=" + std::to_string(n));
    if (o.passed) o.detail = "memoized n<=12, exhaustive n<=10";
    return o;
}

Outcome oracle_steps() {
    Outcome o;
    const auto st = expected_steps(kExactMax);
    for (std::size_t n = 1; n <= kOracleMax; ++n)
        if (oracle_expected_steps(n) != st.ez[n]) o.fail("E(Z_n) differs from oracle at n=" + std::to_string(n));
    const auto q = q_sequence(kExactMax);
    for (std::size_t n = 3; n <= kExactMax; ++n)
        if (Rational(static_cast<long>(n)) * q[n] != Rational(1) - q[n - 1])
            o.fail("n*E(Q_n) != 1 - E(Q_{n-1}) at n=" + std::to_string(n));
    for (std::size_t n = 2; n <= kExactMax; ++n)
        if (q[n] != st.ez[n] - st.ez[n - 1]) o.fail("E(Q_n) != E(Z_n) - E(Z_{n-1}) at n=" + std::to_string(n));
    if (o.passed) o.detail = "oracle n<=12, Q recursion n<=200";
    return o;
}

Outcome convergence() {
    Outcome o;
    const auto rec = solve_recursive(kExactMax);
    for (std::size_t n = 0; n < kExactMax; ++n) {
        const Rational bound(BigInt(1), factorial(static_cast<unsigned>(n + 1)));
        for (std::size_t m = n + 1; m <= kExactMax; ++m)
            if ((rec.det_wins(n).value() - rec.det_wins(m).value()).abs() > bound)
                o.fail("|D_n - D_m| > 1/(n+1)! at n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    for (std::size_t n = 0; n <= kFloatGapMax; ++n) {
        const auto g = gap_to_limit(n, rec);
        if (!(g.gap <= g.bound.to_double() + kLimitFloatSlack)) o.fail("float gap above bound at n=" + std::to_string(n));
    }
    const double gap10 = gap_to_limit(10, rec).gap;
    if (std::fabs(gap10 - 2.31e-8) > 0.005e-8) o.fail("gap at n=10 is " + std::to_string(gap10));
    if (o.passed) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "gap(10)=%.4g", gap10);
        o.detail = buf;
    }
    return o;
}

Outcome monte_carlo() {
    Outcome o;
    const auto rec = solve_recursive(12);
    const auto st = expected_steps(12);
    const double t = static_cast<double>(kMcTrials);
    double worst = 0.0;
    for (std::uint64_t n = 2; n <= 12; ++n) {
        const SimResult r = run_trials(n, kMcTrials, kMcSeed);
        const double d = rec.det_wins(n).to_double();
        const double p_band = kSigmas * std::sqrt(d * (1 - d) / t);
        const double p_err = std::fabs(r.p_hat - d);
        if (!(p_err < p_band)) o.fail("p_hat off by " + std::to_string(p_err) + " at n=" + std::to_string(n));
        const double ez = st.ez[n].to_double();
        const double s_band = kSigmas * r.sd_r_steps / std::sqrt(t);
        const double s_err = std::fabs(r.mean_r_steps - ez);
        // n = 2 has Z_n == 1 on every path: zero spread, so the mean must be exact.
        const bool steps_ok = r.sd_r_steps == 0.0 ? s_err == 0.0 : s_err < s_band;
        if (!steps_ok) o.fail("mean steps off by " + std::to_string(s_err) + " at n=" + std::to_string(n));
        worst = std::max({worst, p_err / p_band * kSigmas, s_band > 0 ? s_err / s_band * kSigmas : 0.0});
    }
    if (o.passed) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "n=2..12, worst deviation %.2f sigma", worst);
        o.detail = buf;
    }
    return o;
}

Outcome reproducibility() {
    Outcome o;
    const std::vector<std::string> args{"simulate", "--n", "10", "--trials", "1000000", "--seed", "42", "--workers", "4"};
    std::string a, b;
    if (cli_call(args, a) != 0 || cli_call(args, b) != 0) o.fail("simulate exited non-zero");
    if (a != b) o.fail("outputs differ between identical runs");

    auto other = args;
    other[8] = "3";
    std::string c, d;
    cli_call(other, c);
    cli_call(other, d);
    if (c != d) o.fail("workers=3 not self-consistent");
    if (o.passed) o.detail = a == c ? "identical runs match" : "identical runs match; workers=3 differs as allowed";
    return o;
}

Outcome verify_command() {
    Outcome o;
    std::string out;
    if (int code = cli_call({"verify", "--n-max", "200", "--oracle-max", "12"}, out); code != 0)
        o.fail("verify exited " + std::to_string(code));
    if (out.find("FAIL") != std::string::npos) o.fail("a check failed");

    cli::Hooks hooks;
    hooks.tamper_verify = [](VerifyInputs& in) { in.derange.d[150] += 1; };
    std::string bad;
    if (int code = cli_call({"verify", "--n-max", "200", "--oracle-max", "12"}, bad, hooks); code != 1)
        o.fail("tampered verify exited " + std::to_string(code));
    if (bad.find("FAIL dn-identity: n=150") == std::string::npos) o.fail("tampered entry not named");

    std::string guard;
    if (cli_call({"verify", "--oracle-max", "15"}, guard) != 2) o.fail("depth guard did not return 2");
    if (o.passed) {
        int checks = 0;
        for (std::size_t p = out.find("PASS "); p != std::string::npos; p = out.find("PASS ", p + 1)) ++checks;
        o.detail = std::to_string(checks) + " checks pass; tampering exits 1";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "cross-method exactness", 1.0, cross_method},
        {"AC2", "derangement identity", 1.0, derangement_identity},
        {"AC3", "base cases", 0.0, base_cases},
        {"AC4", "oracle equivalence (probabilities)", 10.0, oracle_probabilities},
        {"AC5", "oracle equivalence (steps) and Q recursion", 0.0, oracle_steps},
        {"AC6", "convergence to 1/e", 0.0, convergence},
        {"AC7", "Monte Carlo agreement", 30.0, monte_carlo},
        {"AC8", "simulate reproducibility", 0.0, reproducibility},
        {"AC9", "verify command", 0.0, verify_command},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
        }
        std::printf("[%s] %s %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
        if (!o.passed) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
