#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pilegame/exact_core.hpp"
#include "pilegame/oracle.hpp"
#include "pilegame/steps.hpp"

namespace pilegame {

/// Every table the cross-checks read.  Built once, then checked.
struct VerifyInputs {
    std::size_t n_max = 0;
    std::size_t oracle_max = 0;
    WinTable recursive;
    WinTable telescoping;
    WinTable closed;
    WinTable gf;
    DerangementTable derange;
    StepsTable steps;
    std::vector<Rational> q;
    std::vector<OracleResult> oracle;             // memoized, 0..oracle_max
    std::vector<OracleResult> oracle_exhaustive;  // 0..min(oracle_max, 10)
};

struct CheckResult {
    std::string id;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/// Throws std::out_of_range when oracle_max exceeds the memoized depth limit.
VerifyInputs build_verify_inputs(std::size_t n_max, std::size_t oracle_max);

VerifyReport run_checks(const VerifyInputs& in);

/// One "PASS <id>" / "FAIL <id>: <detail>" line per check.
void print_report(const VerifyReport& report, std::ostream& os);

}  // namespace pilegame
