#pragma once

#include "meanlab/report.hpp"

namespace meanlab {

/// Exit statuses of the command line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

struct RunOutcome {
  int exit_code = kExitPass;
  Report report;
};

/// Executes one subcommand:
///   eval M a b | phi M t | sigma M | series M n | compare M N
///   chain M1 M2 ... | best-constant FAMILY TARGET DIR LO HI
///   cancel FAMILY CANDIDATE [left] | identity stolarsky-lehmer a b s
///   suite paper
/// Throws std::invalid_argument for malformed arguments; parse and domain
/// errors from the library propagate.
RunOutcome run(const RunConfig& config);

}  // namespace meanlab
