#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pilegame/cli.hpp"
#include "pilegame/exact_core.hpp"
#include "pilegame/oracle.hpp"
#include "pilegame/simulator.hpp"
#include "pilegame/steps.hpp"
#include "pilegame/verify.hpp"

namespace py = pybind11;
using namespace pilegame;

namespace {

py::object to_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(to_int(r.num()), to_int(r.den()));
}

py::list fractions(const std::vector<ExactProb>& v) {
    py::list out;
    for (const auto& p : v) out.append(to_fraction(p.value()));
    return out;
}

py::list fractions(const std::vector<Rational>& v, std::size_t from) {
    py::list out;
    for (std::size_t i = from; i < v.size(); ++i) out.append(to_fraction(v[i]));
    return out;
}

}  // namespace

PYBIND11_MODULE(_pilegame, m) {
    m.doc() = "Exact and simulated analysis of the random-vs-deterministic pile game";

    m.def(
        "solve",
        [](std::size_t n_max, const std::string& method) { return fractions(solve(parse_method(method), n_max).r); },
        py::arg("n_max"), py::arg("method") = "recursive", "R_n for n = 0..n_max as Fractions");
    m.def(
        "det_win_probs",
        [](std::size_t n_max, const std::string& method) {
            const WinTable t = solve(parse_method(method), n_max);
            py::list out;
            for (std::size_t n = 0; n <= n_max; ++n) out.append(to_fraction(t.det_wins(n).value()));
            return out;
        },
        py::arg("n_max"), py::arg("method") = "recursive", "D_n for n = 0..n_max as Fractions");
    m.def("closed_form", [](std::size_t n) { return to_fraction(closed_form(n).value()); }, py::arg("n"));
    m.def("gf_coefficients", [](std::size_t n_max) { return fractions(gf_coefficients(n_max)); }, py::arg("n_max"));
    m.def(
        "derangements",
        [](std::size_t n_max) {
            py::list out;
            for (const auto& d : derangements(n_max).d) out.append(to_int(d));
            return out;
        },
        py::arg("n_max"));
    m.def(
        "gap_to_limit",
        [](std::size_t n) {
            const LimitGap g = gap_to_limit(n, solve_recursive(n));
            py::dict d;
            d["d_n_float"] = g.d_n_float;
            d["gap"] = g.gap;
            d["bound"] = to_fraction(g.bound);
            return d;
        },
        py::arg("n"));

    m.def(
        "expected_steps",
        [](std::size_t n_max) { return fractions(expected_steps(n_max).ez, 1); }, py::arg("n_max"),
        "E(Z_n) for n = 1..n_max");
    m.def("q_sequence", [](std::size_t n_max) { return fractions(q_sequence(n_max), 2); }, py::arg("n_max"),
          "E(Q_n) for n = 2..n_max");

    m.def(
        "oracle_win_prob",
        [](std::size_t n, bool memoize) {
            return to_fraction(oracle_win_prob(n, memoize ? OracleMode::memoized : OracleMode::exhaustive).value());
        },
        py::arg("n"), py::arg("memoize") = true);
    m.def(
        "oracle_expected_steps",
        [](std::size_t n, bool memoize) {
            return to_fraction(oracle_expected_steps(n, memoize ? OracleMode::memoized : OracleMode::exhaustive));
        },
        py::arg("n"), py::arg("memoize") = true);

    m.def(
        "play_game",
        [](std::uint64_t n, std::uint64_t seed) {
            Xoshiro256ss rng(seed);
            const GameTranscript t = play_game(n, rng);
            py::list moves;
            for (const auto& mv : t.moves)
                moves.append(py::make_tuple(std::string(1, static_cast<char>(mv.player)), mv.removed, mv.remaining));
            py::dict d;
            d["initial_n"] = t.initial_n;
            d["moves"] = moves;
            d["winner"] = std::string(1, static_cast<char>(t.winner));
            d["r_steps"] = t.r_steps;
            return d;
        },
        py::arg("n"), py::arg("seed"));

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("n", &SimResult::n)
        .def_readonly("trials", &SimResult::trials)
        .def_readonly("d_wins", &SimResult::d_wins)
        .def_readonly("p_hat", &SimResult::p_hat)
        .def_readonly("ci_low", &SimResult::ci_low)
        .def_readonly("ci_high", &SimResult::ci_high)
        .def_readonly("ci_level", &SimResult::ci_level)
        .def_readonly("mean_r_steps", &SimResult::mean_r_steps)
        .def_readonly("sd_r_steps", &SimResult::sd_r_steps)
        .def_readonly("seed", &SimResult::seed)
        .def_readonly("workers", &SimResult::workers)
        .def("__repr__", [](const SimResult& r) {
            std::ostringstream os;
            os << "SimResult(n=" << r.n << ", trials=" << r.trials << ", p_hat=" << r.p_hat << ")";
            return os.str();
        });

    m.def(
        "run_trials",
        [](std::uint64_t n, std::uint64_t trials, std::uint64_t seed, unsigned workers, double ci_level) {
            py::gil_scoped_release release;
            return run_trials(n, trials, seed, workers, ci_level);
        },
        py::arg("n"), py::arg("trials"), py::arg("seed") = 42, py::arg("workers") = 1, py::arg("ci_level") = 0.99);
    m.def("wilson_interval", &wilson_interval, py::arg("wins"), py::arg("trials"), py::arg("ci_level") = 0.99);

    m.def(
        "verify",
        [](std::size_t n_max, std::size_t oracle_max) {
            py::list out;
            for (const auto& c : run_checks(build_verify_inputs(n_max, oracle_max)).checks)
                out.append(py::make_tuple(c.id, c.passed, c.detail));
            return out;
        },
        py::arg("n_max") = 200, py::arg("oracle_max") = 12);

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr)");

    m.attr("__version__") = cli::kVersion;
}
