#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meanlab/grid.hpp"

namespace meanlab {

enum class CheckStatus { pass, fail, inconclusive };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;    ///< "AC-1" .. "AC-10"
  std::string name;  ///< what is checked
  CheckStatus status = CheckStatus::fail;
  std::vector<std::string> details;  ///< one line per sub-check
};

// Each check runs its sub-checks on `grid` with its tolerances fixed in
// code, and fails when any sub-check fails.
CheckResult check_elementary_chain(const GridSpec& grid);      // AC-1
CheckResult check_sigma_table();                               // AC-2
CheckResult check_phi_closed_forms();                          // AC-3
CheckResult check_genlog_bounds(const GridSpec& grid);         // AC-4
CheckResult check_holder_gini_bounds(const GridSpec& grid);    // AC-5
CheckResult check_stolarsky_lehmer(const GridSpec& grid, std::uint64_t seed);  // AC-6
CheckResult check_cancelling_means(const GridSpec& grid);      // AC-7
CheckResult check_lambda_family(const GridSpec& grid);         // AC-8
CheckResult check_series_coefficients();                       // AC-9
CheckResult check_seiffert_bounds(const GridSpec& grid);       // AC-10

/// AC-1 .. AC-10 in order.
std::vector<CheckResult> run_acceptance_suite(const GridSpec& grid);

/// Worst status: fail over inconclusive over pass.
CheckStatus overall(const std::vector<CheckResult>& results);

}  // namespace meanlab
