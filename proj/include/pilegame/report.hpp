#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pilegame/exact_core.hpp"
#include "pilegame/simulator.hpp"
#include "pilegame/steps.hpp"

namespace pilegame {

enum class Format { csv, json };
Format parse_format(const std::string& s);

/// 17 significant digits, locale independent.
std::string format_double(double v);

struct ReportRow {
    std::size_t n;
    BigInt d_prob_num;
    BigInt d_prob_den;
    double d_prob_float;
    double gap_to_e_inv;
    BigInt d_n;
    std::string method;
};

std::vector<ReportRow> solve_rows(const WinTable& table, const DerangementTable& derange);

void write_solve(const std::vector<ReportRow>& rows, Format fmt, std::ostream& os);

struct SimReport {
    SimResult sim;
    bool has_exact = false;  // exact fraction is only carried for n <= cli::kSimulateExactMax
    Rational exact_d;
    double exact_d_float = 0.0;
    bool within_ci = false;
};

SimReport make_sim_report(const SimResult& sim);
void write_simulate(const SimReport& rep, Format fmt, std::ostream& os);

void write_steps(const StepsTable& t, Format fmt, std::ostream& os);

void write_convergence(const WinTable& table, Format fmt, std::ostream& os);

}  // namespace pilegame
