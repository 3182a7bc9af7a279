// Acceptance report: one line per criterion, then the sub-check details.
// Criteria that are red for a documented reason are pinned below; the
// binary fails on any other red criterion, and on a pinned one that turns
// green, so the pin list cannot go stale.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "meanlab/order_lab.hpp"
#include "meanlab/acceptance_suite.hpp"
#include "stated_values.hpp"

using namespace meanlab;

namespace {

struct Line {
  std::string id;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;
};

/// Why a criterion is expected to be red. Each reason is checked: the
/// criterion must fail for exactly this cause.
const std::map<std::string, std::string>& pinned_red() {
  static const std::map<std::string, std::string> m{
      {"AC-1",
       "a fixed 1e-11 relative margin cannot hold where the means differ by O(t^2) < 1e-11, "
       "below t of about 8e-6 on the default grid; every link is LE and strict at the "
       "rounding resolution"},
      {"AC-11",
       "twelve stated example values disagree with the 100-digit oracle beyond their last "
       "digit, and one best-constant example names the wrong direction"},
  };
  return m;
}

Line from_check(const CheckResult& r) {
  return {r.id, r.name, r.status == CheckStatus::pass, r.details};
}

std::string fmt(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Line oracle_agreement(const GridSpec& grid) {
  Line l{"AC-11", "stated example values against the extended-precision oracle", true, {}};
  const auto known = oracle::known_disagreements();
  const std::set<std::string> expected(known.begin(), known.end());
  std::set<std::string> found;
  int agreeing = 0;
  for (const auto& v : oracle::stated_values()) {
    if (oracle::agrees(v)) {
      ++agreeing;
      continue;
    }
    found.insert(v.name);
    l.details.push_back("FAIL " + v.name + ": stated " + v.stated + ", exact " +
                        fmt(oracle::to_double(v.exact()), 16) + " (" +
                        fmt(oracle::units_off(v), 4) + " units of the last stated digit)");
  }
  l.details.insert(l.details.begin(), std::to_string(agreeing) + " of " +
                                          std::to_string(oracle::stated_values().size()) +
                                          " stated values agree");

  // The Hoelder lower bound of P is a sup_le constant; the inf_ge direction
  // yields the upper bound 2/3 instead.
  const auto ho = FamilyDescriptor::holder_family();
  const auto P = elementary('P');
  const double log_pi_2 = std::log(2.0) / std::log(M_PI);
  const double inf_ge = best_constant(ho, P, BoundDirection::inf_ge, 0.3, 1, 1e-4, grid).parameter;
  const double sup_le = best_constant(ho, P, BoundDirection::sup_le, 0.3, 1, 1e-4, grid).parameter;
  const bool mislabel = std::fabs(inf_ge - log_pi_2) > 1e-3 && std::fabs(sup_le - log_pi_2) <= 1e-4;
  if (mislabel) {
    l.details.push_back("FAIL best_constant(holder, P, inf_ge, [0.3, 1]) gives " + fmt(inf_ge, 6) +
                        " (= 2/3); log_pi 2 = " + fmt(log_pi_2, 6) + " is the sup_le result " +
                        fmt(sup_le, 6));
  }
  l.pass = found.empty() && !mislabel;
  if (found != expected) {
    l.details.push_back("the disagreement set differs from the pinned list");
  }
  return l;
}

/// A pinned criterion is red for its stated reason only if its details show
/// the expected cause.
bool red_as_pinned(const Line& l, bool ac11_set_matches) {
  if (l.id == "AC-11") return ac11_set_matches;
  if (l.id == "AC-1") {
    // Every FAIL line must be a margin shortfall on an otherwise LE link.
    for (const auto& d : l.details) {
      if (d.rfind("FAIL", 0) == 0 && d.find(": LE, strict at rounding resolution") == std::string::npos) {
        return false;
      }
    }
    return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  const GridSpec grid = make_grid();
  std::vector<Line> lines;
  for (const auto& r : run_acceptance_suite(grid)) lines.push_back(from_check(r));
  lines.push_back(oracle_agreement(grid));
  const bool ac11_set_matches =
      lines.back().details.empty() ||
      lines.back().details.back() != "the disagreement set differs from the pinned list";

  std::ostringstream out;
  int unexpected = 0;
  for (const auto& l : lines) {
    const auto pin = pinned_red().find(l.id);
    std::string mark;
    if (l.pass) {
      mark = pin == pinned_red().end() ? "PASS" : "PASS (pinned red: update the pin list)";
      if (pin != pinned_red().end()) ++unexpected;
    } else if (pin != pinned_red().end() && red_as_pinned(l, ac11_set_matches)) {
      mark = "FAIL (known: " + pin->second + ")";
    } else {
      mark = "FAIL";
      ++unexpected;
    }
    out << l.id << " " << mark << " | " << l.name << "\n";
  }
  out << "\n";
  for (const auto& l : lines) {
    out << l.id << ":\n";
    for (const auto& d : l.details) out << "  " << d << "\n";
  }
  out << "\nunexpected results: " << unexpected << "\n";

  std::cout << out.str();
  if (argc > 1) {
    std::ofstream f(argv[1]);
    f << out.str();
  }
  return unexpected == 0 ? 0 : 1;
}
