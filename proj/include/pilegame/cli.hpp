#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pilegame/verify.hpp"

namespace pilegame::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Largest n for which `simulate` reports the exact D_n as a fraction.
inline constexpr std::uint64_t kSimulateExactMax = 1000;

struct Hooks {
    /// Applied to the verification tables between construction and checking.
    std::function<void(VerifyInputs&)> tamper_verify;
};

/// `args` excludes the program name.  stdout gets the report, stderr diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace pilegame::cli
