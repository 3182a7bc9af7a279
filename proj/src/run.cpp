#include "meanlab/run.hpp"

#include <cmath>
#include <stdexcept>

#include "meanlab/characteristics.hpp"
#include "meanlab/expr.hpp"
#include "meanlab/families.hpp"
#include "meanlab/order_lab.hpp"
#include "meanlab/acceptance_suite.hpp"

namespace meanlab {

using json = nlohmann::ordered_json;

namespace {

double number_arg(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw std::invalid_argument(std::string(what) + " must be a number, got '" + s + "'");
  }
  return v;
}

void need_args(const RunConfig& c, std::size_t lo, std::size_t hi, const char* usage) {
  if (c.args.size() < lo || c.args.size() > hi) {
    throw std::invalid_argument(std::string("usage: ") + usage);
  }
}

json witness_json(const Witness& w) {
  return {{"t", w.t},
          {"a", w.a},
          {"b", w.b},
          {"m_value", w.m_value},
          {"n_value", w.n_value},
          {"half_log_ratio", w.half_log_ratio},
          {"m_above", w.m_above}};
}

json grid_json(const GridSpec& g) {
  return {{"points", g.t_values.size()},
          {"t_min", g.t_values.front()},
          {"t_max", g.t_values.back()},
          {"seed", g.seed}};
}

RunOutcome do_eval(const RunConfig& c) {
  need_args(c, 3, 3, "eval M a b");
  const auto m = parse_mean_expr(c.args[0]);
  const double a = number_arg(c.args[1], "a");
  const double b = number_arg(c.args[2], "b");
  RunOutcome o;
  o.report.inputs = {{"mean", m.expr()}, {"a", a}, {"b", b}};
  o.report.table.columns = {"mean", "a", "b", "value"};
  o.report.table.rows.push_back({m.expr(), a, b, m(a, b)});
  return o;
}

RunOutcome do_phi(const RunConfig& c) {
  need_args(c, 2, 2, "phi M t");
  const auto m = parse_mean_expr(c.args[0]);
  const double t = number_arg(c.args[1], "t");
  RunOutcome o;
  o.report.inputs = {{"mean", m.expr()}, {"t", t}};
  o.report.table.columns = {"mean", "t", "phi"};
  o.report.table.rows.push_back({m.expr(), t, phi(m, t)});
  return o;
}

RunOutcome do_sigma(const RunConfig& c) {
  need_args(c, 1, 1, "sigma M");
  const auto m = parse_mean_expr(c.args[0]);
  const auto s = sigma(m);
  RunOutcome o;
  o.report.inputs = {{"mean", m.expr()}};
  o.report.table.columns = {"epsilon", "phi", "aitken"};
  for (std::size_t i = 0; i < s.tail.size(); ++i) {
    json aitken = nullptr;
    if (i >= 2 && i - 2 < s.extrapolates.size()) aitken = s.extrapolates[i - 2];
    o.report.table.rows.push_back({s.tail[i].first, s.tail[i].second, aitken});
  }
  o.report.summary["sigma"] = s.value;
  o.report.summary["converged"] = s.converged;
  try {
    o.report.summary["closed_form"] = sigma_closed(m);
  } catch (const UnsupportedError&) {
    o.report.summary["closed_form"] = nullptr;
  }
  o.report.verdict = s.converged ? "converged" : "slow-convergent";
  return o;
}

RunOutcome do_series(const RunConfig& c) {
  need_args(c, 2, 2, "series M n");
  const auto m = parse_mean_expr(c.args[0]);
  const double n = number_arg(c.args[1], "n");
  if (n != std::floor(n) || n < 1 || n > 12) {
    throw std::invalid_argument("series order must be an integer in [1, 12]");
  }
  const auto s = phi_series(m, static_cast<int>(n));
  RunOutcome o;
  o.report.inputs = {{"mean", m.expr()}, {"order", static_cast<int>(n)}};
  o.report.table.columns = {"power", "coefficient"};
  for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
    o.report.table.rows.push_back({static_cast<int>(2 * k), s.coefficients[k]});
  }
  o.report.summary["fit_residual"] = s.fit_residual;
  o.report.summary["full_fit_residual"] = s.full_fit_residual;
  o.report.summary["fit_order"] = s.fit_order;
  o.report.summary["flagged"] = s.flagged;
  o.report.verdict = s.flagged ? "flagged" : "ok";
  return o;
}

RunOutcome do_compare(const RunConfig& c, const GridSpec& grid) {
  need_args(c, 2, 2, "compare M N");
  const auto m = parse_mean_expr(c.args[0]);
  const auto n = parse_mean_expr(c.args[1]);
  const auto r = compare(m, n, grid, c.tol);
  RunOutcome o;
  o.report.inputs = {{"m", m.expr()}, {"n", n.expr()}, {"tol", c.tol}, {"grid", grid_json(grid)}};
  o.report.table.columns = {"t", "a", "b", "lhs", "rhs", "diff"};
  for (const auto& s : r.samples) {
    o.report.table.rows.push_back({s.t, s.a, s.b, s.lhs, s.rhs, s.lhs - s.rhs});
  }
  for (const auto& w : r.witnesses) o.report.witnesses.push_back(witness_json(w));
  o.report.summary["max_violation"] = r.max_violation;
  o.report.summary["strict"] = r.strict;
  o.report.summary["witness_count"] = r.witnesses.size();
  o.report.verdict = to_string(r.verdict);
  return o;
}

RunOutcome do_chain(const RunConfig& c, const GridSpec& grid) {
  if (c.args.size() < 2) throw std::invalid_argument("usage: chain M1 M2 ...");
  std::vector<MeanDescriptor> means;
  for (const auto& a : c.args) means.push_back(parse_mean_expr(a));
  const auto rep = verify_chain(means, grid, c.tol);
  RunOutcome o;
  json names = json::array();
  for (const auto& m : means) names.push_back(m.expr());
  o.report.inputs = {{"means", names}, {"tol", c.tol}, {"grid", grid_json(grid)}};
  o.report.table.columns = {"link", "m", "n", "verdict", "strict", "max_violation"};
  for (std::size_t i = 0; i < rep.links.size(); ++i) {
    const auto& l = rep.links[i];
    o.report.table.rows.push_back({static_cast<int>(i + 1), means[i].expr(), means[i + 1].expr(),
                                   to_string(l.verdict), l.strict, l.max_violation});
    for (const auto& w : l.witnesses) {
      json jw = witness_json(w);
      jw["link"] = i + 1;
      o.report.witnesses.push_back(jw);
    }
  }
  o.report.verdict = rep.passed ? "PASS" : "FAIL";
  o.exit_code = rep.passed ? kExitPass : kExitFail;
  return o;
}

RunOutcome do_best_constant(const RunConfig& c, const GridSpec& grid) {
  need_args(c, 5, 6, "best-constant FAMILY TARGET sup_le|inf_ge LO HI [BISECTION_TOL]");
  const auto fam = family_by_name(c.args[0]);
  const auto target = parse_mean_expr(c.args[1]);
  const auto dir = bound_direction_from_string(c.args[2]);
  const double lo = number_arg(c.args[3], "LO");
  const double hi = number_arg(c.args[4], "HI");
  const double btol = c.args.size() == 6 ? number_arg(c.args[5], "BISECTION_TOL") : 1e-4;
  RunOutcome o;
  o.report.inputs = {{"family", fam.name()}, {"target", target.expr()},
                     {"direction", to_string(dir)}, {"bracket", {lo, hi}},
                     {"bisection_tol", btol},      {"tol", c.tol},
                     {"grid", grid_json(grid)}};
  o.report.table.columns = {"iter", "lo", "hi", "trial", "verdict"};
  try {
    const auto r = best_constant(fam, target, dir, lo, hi, btol, grid, c.tol);
    for (const auto& s : r.trace) {
      o.report.table.rows.push_back({s.iter, s.lo, s.hi, s.trial, s.holds ? "holds" : "fails"});
    }
    o.report.summary["parameter"] = r.parameter;
    o.report.summary["low"] = r.low;
    o.report.summary["high"] = r.high;
    o.report.summary["iterations"] = r.iterations;
    o.report.summary["violating_t"] = std::isnan(r.violating_t) ? json(nullptr)
                                                                : json(r.violating_t);
    o.report.verdict = "FOUND";
  } catch (const BracketError& e) {
    o.report.summary["error"] = e.what();
    o.report.verdict = "BRACKET_ERROR";
    o.exit_code = kExitFail;
  }
  return o;
}

RunOutcome do_cancel(const RunConfig& c, const GridSpec& grid) {
  need_args(c, 2, 3, "cancel FAMILY CANDIDATE [left]");
  const auto fam = family_by_name(c.args[0]);
  const auto cand = parse_mean_expr(c.args[1]);
  bool left = false;
  if (c.args.size() == 3) {
    if (c.args[2] != "left" && c.args[2] != "right") {
      throw std::invalid_argument("cancel: side must be left or right");
    }
    left = c.args[2] == "left";
  }
  const auto ladder = default_ladder(fam, left);
  CancellationOptions opt;
  opt.tol = c.tol;
  const auto v = left ? left_cancelling_verdict(fam, cand, ladder, grid, opt)
                      : cancelling_verdict(fam, cand, ladder, grid, opt);
  RunOutcome o;
  o.report.inputs = {{"family", fam.name()}, {"candidate", cand.expr()}, {"side", left ? "left" : "right"},
                     {"ladder", ladder},     {"tol", c.tol},            {"grid", grid_json(grid)}};
  o.report.table.columns = {"param", "status", "via_sigma", "sigma_member", "witness_t",
                            "witness_half_log_ratio"};
  for (const auto& m : v.members) {
    json sm = m.sigma_member ? json(*m.sigma_member) : json(nullptr);
    json wt = m.witness ? json(m.witness->t) : json(nullptr);
    json wu = m.witness ? json(m.witness->half_log_ratio) : json(nullptr);
    o.report.table.rows.push_back({m.param, to_string(m.status), m.via_sigma, sm, wt, wu});
    if (m.witness) {
      json jw = witness_json(*m.witness);
      jw["param"] = m.param;
      o.report.witnesses.push_back(jw);
    }
  }
  o.report.summary["dominates_some_member"] = v.dominates_some_member;
  o.report.summary["dominated_member_param"] =
      v.dominated_member_param ? json(*v.dominated_member_param) : json(nullptr);
  o.report.summary["dominated_by_none"] = v.dominated_by_none;
  o.report.summary["sigma_candidate"] = v.sigma_candidate ? json(*v.sigma_candidate) : json(nullptr);
  o.report.summary["sigma_argument_used"] = v.sigma_argument_used;
  o.report.summary["note"] = v.note;
  o.report.verdict = to_string(v.verdict);
  o.exit_code = v.verdict == Verdict::SUPPORTED    ? kExitPass
                : v.verdict == Verdict::REFUTED ? kExitFail
                                                : kExitInconclusive;
  return o;
}

RunOutcome do_identity(const RunConfig& c) {
  need_args(c, 4, 4, "identity stolarsky-lehmer a b s");
  if (c.args[0] != "stolarsky-lehmer") {
    throw std::invalid_argument("identity: unknown identity '" + c.args[0] + "'");
  }
  const double a = number_arg(c.args[1], "a");
  const double b = number_arg(c.args[2], "b");
  const double s = number_arg(c.args[3], "s");
  const auto r = stolarsky_lehmer_identity(a, b, s);
  constexpr double kIdentityTol = 1e-10;
  RunOutcome o;
  o.report.inputs = {{"identity", c.args[0]}, {"a", a}, {"b", b}, {"s", s}};
  o.report.table.columns = {"a", "b", "s", "lhs", "rhs", "residual", "relative"};
  o.report.table.rows.push_back({a, b, s, r.lhs, r.rhs, r.residual, r.relative});
  const bool ok = r.relative <= kIdentityTol;
  o.report.verdict = ok ? "PASS" : "FAIL";
  o.exit_code = ok ? kExitPass : kExitFail;
  return o;
}

RunOutcome do_suite(const RunConfig& c, const GridSpec& grid) {
  need_args(c, 1, 1, "suite paper");
  if (c.args[0] != "paper") throw std::invalid_argument("suite: unknown suite '" + c.args[0] + "'");
  const auto results = run_acceptance_suite(grid);
  RunOutcome o;
  o.report.inputs = {{"suite", "paper"}, {"grid", grid_json(grid)}};
  o.report.table.columns = {"id", "check", "status"};
  for (const auto& r : results) {
    o.report.table.rows.push_back({r.id, r.name, to_string(r.status)});
    o.report.summary[r.id] = r.details;
  }
  const auto s = overall(results);
  o.report.verdict = to_string(s);
  o.exit_code = s == CheckStatus::pass   ? kExitPass
                : s == CheckStatus::fail ? kExitFail
                                         : kExitInconclusive;
  return o;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
  const std::string& cmd = config.command;
  RunOutcome o;
  if (cmd == "eval") {
    o = do_eval(config);
  } else if (cmd == "phi") {
    o = do_phi(config);
  } else if (cmd == "sigma") {
    o = do_sigma(config);
  } else if (cmd == "series") {
    o = do_series(config);
  } else if (cmd == "identity") {
    o = do_identity(config);
  } else {
    const GridSpec grid = make_grid(config.grid);
    if (cmd == "compare") {
      o = do_compare(config, grid);
    } else if (cmd == "chain") {
      o = do_chain(config, grid);
    } else if (cmd == "best-constant") {
      o = do_best_constant(config, grid);
    } else if (cmd == "cancel") {
      o = do_cancel(config, grid);
    } else if (cmd == "suite") {
      o = do_suite(config, grid);
    } else {
      throw std::invalid_argument("unknown command '" + cmd + "'");
    }
  }
  o.report.command = cmd;
  return o;
}

}  // namespace meanlab
