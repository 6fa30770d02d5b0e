#include "pilegame/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "pilegame/cli.hpp"

namespace pilegame {

namespace {

using Json = nlohmann::ordered_json;

// Big integers go to JSON as decimal strings so no consumer truncates them.
std::string big(const BigInt& v) { return v.get_str(); }

Json meta(const std::string& command) {
    Json m;
    m["command"] = command;
    m["seed"] = nullptr;
    m["method"] = nullptr;
    m["version"] = cli::kVersion;
    return m;
}

void emit(const Json& doc, std::ostream& os) { os << doc.dump(2) << "\n"; }

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw std::invalid_argument("unknown format: " + s);
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, end);
}

std::vector<ReportRow> solve_rows(const WinTable& table, const DerangementTable& derange) {
    std::vector<ReportRow> rows;
    rows.reserve(table.n_max + 1);
    for (std::size_t n = 0; n <= table.n_max; ++n) {
        const Rational d = table.det_wins(n).value();
        const LimitGap g = gap_to_limit(n, table);
        rows.push_back(ReportRow{n, d.num(), d.den(), g.d_n_float, g.gap, derange.d.at(n),
                                 std::string(to_string(table.method))});
    }
    return rows;
}

void write_solve(const std::vector<ReportRow>& rows, Format fmt, std::ostream& os) {
    if (fmt == Format::csv) {
        os << "n,d_prob_num,d_prob_den,d_prob_float,gap_to_e_inv,d_n,method\n";
        for (const auto& r : rows) {
            os << r.n << ',' << r.d_prob_num.get_str() << ',' << r.d_prob_den.get_str() << ','
               << format_double(r.d_prob_float) << ',' << format_double(r.gap_to_e_inv) << ',' << r.d_n.get_str()
               << ',' << r.method << '\n';
        }
        return;
    }
    Json doc;
    doc["meta"] = meta("solve");
    if (!rows.empty()) doc["meta"]["method"] = rows.front().method;
    doc["rows"] = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["n"] = r.n;
        j["d_prob_num"] = big(r.d_prob_num);
        j["d_prob_den"] = big(r.d_prob_den);
        j["d_prob_float"] = r.d_prob_float;
        j["gap_to_e_inv"] = r.gap_to_e_inv;
        j["d_n"] = big(r.d_n);
        j["method"] = r.method;
        doc["rows"].push_back(std::move(j));
    }
    emit(doc, os);
}

SimReport make_sim_report(const SimResult& sim) {
    SimReport rep;
    rep.sim = sim;
    // Past the cap, D_n and D_cap differ by less than 1/(cap+1)!, far below one ulp.
    const std::size_t n_exact = static_cast<std::size_t>(std::min<std::uint64_t>(sim.n, cli::kSimulateExactMax));
    const Rational d = solve_telescoping(n_exact).det_wins(n_exact).value();
    rep.has_exact = sim.n <= cli::kSimulateExactMax;
    rep.exact_d = d;
    rep.exact_d_float = d.to_double();
    rep.within_ci = sim.ci_low <= rep.exact_d_float && rep.exact_d_float <= sim.ci_high;
    return rep;
}

void write_simulate(const SimReport& rep, Format fmt, std::ostream& os) {
    const SimResult& s = rep.sim;
    if (fmt == Format::csv) {
        os << "n,trials,d_wins,p_hat,ci_low,ci_high,ci_level,mean_r_steps,sd_r_steps,seed,workers,"
              "exact_d_num,exact_d_den,exact_d_float,within_ci\n";
        os << s.n << ',' << s.trials << ',' << s.d_wins << ',' << format_double(s.p_hat) << ','
           << format_double(s.ci_low) << ',' << format_double(s.ci_high) << ',' << format_double(s.ci_level) << ','
           << format_double(s.mean_r_steps) << ',' << format_double(s.sd_r_steps) << ',' << s.seed << ','
           << s.workers << ',';
        if (rep.has_exact) os << rep.exact_d.num().get_str() << ',' << rep.exact_d.den().get_str();
        else os << ',';
        os << ',' << format_double(rep.exact_d_float) << ',' << (rep.within_ci ? "true" : "false") << '\n';
        return;
    }
    Json doc;
    doc["meta"] = meta("simulate");
    doc["meta"]["seed"] = s.seed;
    Json j;
    j["n"] = s.n;
    j["trials"] = s.trials;
    j["d_wins"] = s.d_wins;
    j["p_hat"] = s.p_hat;
    j["ci_low"] = s.ci_low;
    j["ci_high"] = s.ci_high;
    j["ci_level"] = s.ci_level;
    j["mean_r_steps"] = s.mean_r_steps;
    j["sd_r_steps"] = s.sd_r_steps;
    j["seed"] = s.seed;
    j["workers"] = s.workers;
    j["exact_d_num"] = rep.has_exact ? Json(big(rep.exact_d.num())) : Json(nullptr);
    j["exact_d_den"] = rep.has_exact ? Json(big(rep.exact_d.den())) : Json(nullptr);
    j["exact_d_float"] = rep.exact_d_float;
    j["within_ci"] = rep.within_ci;
    doc["rows"] = Json::array({j});
    emit(doc, os);
}

void write_steps(const StepsTable& t, Format fmt, std::ostream& os) {
    if (fmt == Format::csv) {
        os << "n,ez_num,ez_den,eq_num,eq_den,ez_float\n";
        for (std::size_t n = 1; n <= t.n_max; ++n) {
            os << n << ',' << t.ez[n].num().get_str() << ',' << t.ez[n].den().get_str() << ',';
            if (n >= 2) os << t.eq[n].num().get_str() << ',' << t.eq[n].den().get_str();
            else os << ',';
            os << ',' << format_double(t.ez[n].to_double()) << '\n';
        }
        return;
    }
    Json doc;
    doc["meta"] = meta("steps");
    doc["rows"] = Json::array();
    for (std::size_t n = 1; n <= t.n_max; ++n) {
        Json j;
        j["n"] = n;
        j["ez_num"] = big(t.ez[n].num());
        j["ez_den"] = big(t.ez[n].den());
        j["eq_num"] = n >= 2 ? Json(big(t.eq[n].num())) : Json(nullptr);
        j["eq_den"] = n >= 2 ? Json(big(t.eq[n].den())) : Json(nullptr);
        j["ez_float"] = t.ez[n].to_double();
        doc["rows"].push_back(std::move(j));
    }
    emit(doc, os);
}

void write_convergence(const WinTable& table, Format fmt, std::ostream& os) {
    if (fmt == Format::csv) os << "n,d_prob_float,gap_to_e_inv,bound\n";
    Json doc;
    if (fmt == Format::json) {
        doc["meta"] = meta("convergence");
        doc["meta"]["method"] = std::string(to_string(table.method));
        doc["rows"] = Json::array();
    }
    for (std::size_t n = 0; n <= table.n_max; ++n) {
        const LimitGap g = gap_to_limit(n, table);
        const double bound = g.bound.to_double();
        if (fmt == Format::csv) {
            os << n << ',' << format_double(g.d_n_float) << ',' << format_double(g.gap) << ','
               << format_double(bound) << '\n';
        } else {
            Json j;
            j["n"] = n;
            j["d_prob_float"] = g.d_n_float;
            j["gap_to_e_inv"] = g.gap;
            j["bound"] = bound;
            doc["rows"].push_back(std::move(j));
        }
    }
    if (fmt == Format::json) emit(doc, os);
}

}  // namespace pilegame
