#include "pilegame/cli.hpp"

#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "pilegame/exact_core.hpp"
#include "pilegame/report.hpp"
#include "pilegame/simulator.hpp"
#include "pilegame/steps.hpp"

namespace pilegame::cli {

namespace {

const std::vector<std::string> kMethods{"recursive", "telescoping", "closed-form", "gf"};
const std::vector<std::string> kFormats{"csv", "json"};

void add_format(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Random-vs-deterministic pile game: exact solvers, simulation and cross-checks", "pilegame"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::size_t solve_n_max = 10;
    std::string method = "recursive";
    std::string solve_fmt = "csv";
    auto* solve_cmd = app.add_subcommand("solve", "Exact D_n for n = 0..n-max by one analytic method");
    solve_cmd->add_option("--n-max", solve_n_max, "Largest pile size")->capture_default_str();
    solve_cmd->add_option("--method", method, "Solver")->check(CLI::IsMember(kMethods))->capture_default_str();
    add_format(solve_cmd, solve_fmt);

    std::uint64_t sim_n = 10;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 42;
    unsigned workers = 1;
    double ci_level = 0.99;
    std::string sim_fmt = "json";
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of D_n and E(Z_n)");
    sim_cmd->add_option("--n", sim_n, "Initial pile size")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX))
        ->capture_default_str();
    sim_cmd->add_option("--trials", trials, "Number of games")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX))
        ->capture_default_str();
    sim_cmd->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    sim_cmd->add_option("--workers", workers, "Independent streams / threads")->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    sim_cmd->add_option("--ci-level", ci_level, "Confidence level (0.90, 0.95, 0.99, 0.999)")
        ->check([](const std::string& s) -> std::string {
            try {
                z_for_level(std::stod(s));
            } catch (const std::exception& e) {
                return e.what();
            }
            return {};
        })
        ->capture_default_str();
    add_format(sim_cmd, sim_fmt);

    std::size_t steps_n_max = 10;
    std::string steps_fmt = "csv";
    auto* steps_cmd = app.add_subcommand("steps", "Exact E(Z_n) and E(Q_n)");
    steps_cmd->add_option("--n-max", steps_n_max, "Largest pile size")
        ->check(CLI::Range(std::size_t{1}, SIZE_MAX))
        ->capture_default_str();
    add_format(steps_cmd, steps_fmt);

    std::size_t verify_n_max = 200;
    std::size_t oracle_max = 12;
    auto* verify_cmd = app.add_subcommand("verify", "Run every cross-method check");
    verify_cmd->add_option("--n-max", verify_n_max, "Largest n for the analytic checks")->capture_default_str();
    verify_cmd->add_option("--oracle-max", oracle_max, "Largest n for game-tree enumeration")
        ->check(CLI::Range(std::size_t{0}, kOracleMaxMemoized))
        ->capture_default_str();

    std::size_t conv_n_max = 20;
    std::string conv_fmt = "csv";
    auto* conv_cmd = app.add_subcommand("convergence", "Distance of D_n from 1/e");
    conv_cmd->add_option("--n-max", conv_n_max, "Largest pile size")->capture_default_str();
    add_format(conv_cmd, conv_fmt);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const bool informational = e.get_exit_code() == 0;
        std::ostream& sink = informational ? out : err;
        if (dynamic_cast<const CLI::CallForHelp*>(&e) || dynamic_cast<const CLI::CallForAllHelp*>(&e))
            sink << app.help();
        else if (dynamic_cast<const CLI::CallForVersion*>(&e))
            sink << e.what() << "\n";
        else
            sink << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return informational ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) {
            const WinTable table = solve(parse_method(method), solve_n_max);
            write_solve(solve_rows(table, derangements(solve_n_max)), parse_format(solve_fmt), out);
        } else if (*sim_cmd) {
            const SimResult r = run_trials(sim_n, trials, seed, workers, ci_level);
            write_simulate(make_sim_report(r), parse_format(sim_fmt), out);
        } else if (*steps_cmd) {
            write_steps(expected_steps(steps_n_max), parse_format(steps_fmt), out);
        } else if (*verify_cmd) {
            VerifyInputs in = build_verify_inputs(verify_n_max, oracle_max);
            if (hooks.tamper_verify) hooks.tamper_verify(in);
            const VerifyReport rep = run_checks(in);
            print_report(rep, out);
            return rep.all_passed() ? kOk : kVerifyFailed;
        } else if (*conv_cmd) {
            write_convergence(solve_recursive(conv_n_max), parse_format(conv_fmt), out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace pilegame::cli
