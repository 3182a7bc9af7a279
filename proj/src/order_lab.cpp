#include "meanlab/order_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mean_impl.hpp"

namespace meanlab {

namespace {

/// (m - n)/max(m, n) from log m - log n.
double relative_gap(double dl) { return dl > 0.0 ? -std::expm1(-dl) : std::expm1(dl); }

double checked_log_phi(const MeanDescriptor& m, const CanonicalPoint& p, double t) {
  double v;
  try {
    v = m.log_phi(p);
  } catch (const std::exception& e) {
    throw EvaluationError(m.expr() + ": " + e.what() + " at t " + detail::format_param(t), t);
  }
  if (std::isnan(v)) {
    throw EvaluationError(m.expr() + ": non-finite value at t " + detail::format_param(t), t);
  }
  return v;
}

Witness make_witness(const CanonicalPoint& p, double lm, double ln) {
  Witness w;
  w.t = p.t;
  w.a = p.lo;
  w.b = p.hi;
  w.m_value = std::exp(lm);
  w.n_value = std::exp(ln);
  w.half_log_ratio = p.half_log_ratio;
  w.m_above = lm > ln;
  return w;
}

bool holds(Order o, BoundDirection d) {
  if (o == Order::EQUAL) return true;
  return d == BoundDirection::sup_le ? o == Order::LE : o == Order::GE;
}

/// Grid t with the largest violation of the target inequality, ties to the
/// smallest t.
double violating_t(const OrderingReport& r, BoundDirection d) {
  double best = 0.0;
  double t = std::numeric_limits<double>::quiet_NaN();
  for (const auto& s : r.samples) {
    const double excess = d == BoundDirection::sup_le ? s.lhs - s.rhs : s.rhs - s.lhs;
    const double gap = excess / std::max(s.lhs, s.rhs);
    if (gap > best) {
      best = gap;
      t = s.t;
    }
  }
  return t;
}

}  // namespace

std::string to_string(Order o) {
  switch (o) {
    case Order::LE: return "LE";
    case Order::GE: return "GE";
    case Order::CROSSING: return "CROSSING";
    case Order::EQUAL: return "EQUAL";
  }
  return "?";
}

std::string to_string(BoundDirection d) {
  return d == BoundDirection::sup_le ? "sup_le" : "inf_ge";
}

BoundDirection bound_direction_from_string(const std::string& s) {
  if (s == "sup_le") return BoundDirection::sup_le;
  if (s == "inf_ge") return BoundDirection::inf_ge;
  throw std::invalid_argument("direction must be sup_le or inf_ge, got '" + s + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SUPPORTED: return "SUPPORTED";
    case Verdict::REFUTED: return "REFUTED";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(MemberStatus s) {
  switch (s) {
    case MemberStatus::refuted: return "refuted";
    case MemberStatus::dominates: return "dominates";
    case MemberStatus::identical: return "identical";
    case MemberStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

OrderingReport compare(const MeanDescriptor& m, const MeanDescriptor& n, const GridSpec& grid,
                       double tol) {
  if (grid.t_values.empty()) throw std::invalid_argument("compare: empty grid");
  if (!(tol >= 0.0)) throw std::invalid_argument("compare: tolerance must be nonnegative");

  OrderingReport r;
  std::vector<Witness> above;
  std::vector<Witness> below;
  std::vector<double> gaps;
  std::vector<double> margins;
  const double scale_m = m.parameter_scale();
  const double scale_n = n.parameter_scale();
  double max_above = 0.0;
  double max_below = 0.0;
  for (double t : grid.t_values) {
    const auto p = CanonicalPoint::from_t(t);
    const double lm = checked_log_phi(m, p, t);
    const double ln = checked_log_phi(n, p, t);
    const double gap = relative_gap(lm - ln);
    gaps.push_back(gap);
    margins.push_back(kStrictResolution * (scale_m * (t * t + std::fabs(lm)) +
                                           scale_n * (t * t + std::fabs(ln))));
    r.samples.push_back({t, p.lo, p.hi, std::exp(lm), std::exp(ln)});
    max_above = std::max(max_above, gap);
    max_below = std::max(max_below, -gap);
    if (gap > tol) above.push_back(make_witness(p, lm, ln));
    if (gap < -tol) below.push_back(make_witness(p, lm, ln));
  }

  if (!above.empty() && !below.empty()) {
    r.verdict = Order::CROSSING;
    r.max_violation = max_above;
    r.witnesses = above;
    r.witnesses.insert(r.witnesses.end(), below.begin(), below.end());
    std::stable_sort(r.witnesses.begin(), r.witnesses.end(),
                     [](const Witness& x, const Witness& y) { return x.t < y.t; });
  } else if (!below.empty()) {
    r.verdict = Order::LE;
    r.max_violation = max_above;
  } else if (!above.empty()) {
    r.verdict = Order::GE;
    r.max_violation = max_below;
    r.witnesses = above;
  } else {
    r.verdict = Order::EQUAL;
    r.max_violation = max_above;
  }

  if (r.verdict == Order::LE || r.verdict == Order::GE) {
    const double sign = r.verdict == Order::LE ? -1.0 : 1.0;
    r.strict = true;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      const double sep = sign * gaps[i];
      if (!(sep > margins[i])) r.strict = false;
      if (sep > tol) ++r.flat_margin_points;
    }
  }
  return r;
}

ChainReport verify_chain(const std::vector<MeanDescriptor>& means, const GridSpec& grid,
                         double tol) {
  if (means.size() < 2) throw std::invalid_argument("verify_chain: need at least two means");
  ChainReport out;
  out.passed = true;
  for (std::size_t i = 0; i + 1 < means.size(); ++i) {
    out.links.push_back(compare(means[i], means[i + 1], grid, tol));
    if (out.links.back().verdict != Order::LE) out.passed = false;
  }
  return out;
}

MonotonicityReport monotone_in_param(const FamilyDescriptor& family, std::vector<double> ladder,
                                     const GridSpec& grid, double tol) {
  if (ladder.size() < 2) throw std::invalid_argument("monotone_in_param: need two parameters");
  std::sort(ladder.begin(), ladder.end());
  MonotonicityReport out;
  out.ladder = ladder;
  out.passed = true;
  for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
    out.links.push_back(
        compare(family.instance(ladder[i]), family.instance(ladder[i + 1]), grid, tol));
    if (out.links.back().verdict != Order::LE) out.passed = false;
  }
  return out;
}

BestConstantResult best_constant(const FamilyDescriptor& family, const MeanDescriptor& target,
                                 BoundDirection direction, double lo, double hi, double tol,
                                 const GridSpec& grid, double cmp_tol) {
  if (!family.ordered) {
    throw std::invalid_argument("best_constant: family " + family.name() + " is not ordered");
  }
  if (!(lo < hi)) throw std::invalid_argument("best_constant: bracket must satisfy lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("best_constant: tol must be positive");

  auto run = [&](double p) { return compare(family.instance(p), target, grid, cmp_tol); };
  const auto at_lo = run(lo);
  const auto at_hi = run(hi);
  const bool lo_holds = holds(at_lo.verdict, direction);
  const bool hi_holds = holds(at_hi.verdict, direction);
  const bool good_end_low = direction == BoundDirection::sup_le;
  if ((good_end_low && !(lo_holds && !hi_holds)) || (!good_end_low && !(hi_holds && !lo_holds))) {
    throw BracketError("best_constant: bracket [" + detail::format_param(lo) + ", " +
                       detail::format_param(hi) + "] does not straddle the constant (" +
                       to_string(at_lo.verdict) + " at low end, " + to_string(at_hi.verdict) +
                       " at high end)");
  }

  BestConstantResult out;
  out.direction = direction;
  OrderingReport failing = good_end_low ? at_hi : at_lo;
  int iter = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const auto r = run(mid);
    const bool ok = holds(r.verdict, direction);
    out.trace.push_back({++iter, lo, hi, mid, ok});
    if (ok == good_end_low) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (!ok) failing = r;
  }
  out.low = lo;
  out.high = hi;
  out.parameter = 0.5 * (lo + hi);
  out.iterations = iter;
  out.violating_t = violating_t(failing, direction);
  return out;
}

std::vector<double> CancellationOptions::default_deep_probes() {
  std::vector<double> u;
  for (int k = 1; k <= 300; ++k) u.push_back(std::pow(10.0, k));
  return u;
}

std::vector<double> default_ladder(const FamilyDescriptor& family, bool left) {
  if (family.id == FamilyId::finite) {
    std::vector<double> idx;
    for (std::size_t i = 0; i < family.members.size(); ++i) idx.push_back(static_cast<double>(i));
    return idx;
  }
  std::vector<double> ladder{0.5, 1, 2, 3, 5, 10, 20, 50};
  switch (family.id) {
    case FamilyId::holder: ladder.push_back(2); break;
    case FamilyId::genlog: ladder.push_back(3); break;
    case FamilyId::stolarsky_diagonal: ladder.push_back(3); break;
    case FamilyId::lambda: ladder.push_back(5); break;
    default: break;
  }
  std::sort(ladder.begin(), ladder.end());
  ladder.erase(std::unique(ladder.begin(), ladder.end()), ladder.end());
  if (left) {
    for (double& p : ladder) p = -p;
    std::reverse(ladder.begin(), ladder.end());
  }
  return ladder;
}

namespace {

/// Point where member < candidate by more than tol (largest deficit, ties to
/// the smallest t), first on the grid, then at the deep probes.
std::optional<Witness> find_undercut(const MeanDescriptor& member, const MeanDescriptor& cand,
                                     const GridSpec& grid, const CancellationOptions& opt) {
  std::optional<Witness> best;
  double best_gap = opt.tol;
  auto consider = [&](const CanonicalPoint& p) {
    const double lm = member.log_phi(p);
    const double lc = cand.log_phi(p);
    if (!std::isfinite(lm) || !std::isfinite(lc)) return;
    const double deficit = -relative_gap(lm - lc);
    if (deficit > best_gap) {
      best_gap = deficit;
      best = make_witness(p, lm, lc);
    }
  };
  for (double t : grid.t_values) consider(CanonicalPoint::from_t(t));
  if (best) return best;
  for (double u : opt.deep_probes) {
    consider(CanonicalPoint::from_half_log_ratio(u));
    if (best) return best;
  }
  return best;
}

}  // namespace

CancellationVerdict cancelling_verdict(const FamilyDescriptor& family,
                                       const MeanDescriptor& candidate,
                                       const std::vector<double>& ladder, const GridSpec& grid,
                                       const CancellationOptions& options) {
  if (ladder.empty()) throw std::invalid_argument("cancelling_verdict: empty parameter ladder");
  if (family.id != FamilyId::finite) {
    double reach = 0.0;
    for (double p : ladder) reach = std::max(reach, std::fabs(p));
    if (reach < 10.0) {
      throw std::invalid_argument("cancelling_verdict: ladder must reach |p| >= 10");
    }
  }

  CancellationVerdict v;
  v.candidate = candidate.expr();
  v.family = family.name();

  for (double p : ladder) {
    const auto r = compare(family.instance(p), candidate, grid, options.tol);
    if (r.verdict == Order::LE || r.verdict == Order::EQUAL) {
      v.dominates_some_member = true;
      v.dominated_member_param = p;
      break;
    }
  }

  const SigmaResult sc = sigma_best(candidate);
  if (sc.converged) v.sigma_candidate = sc.value;

  bool any_dominates = false;
  bool any_inconclusive = false;
  for (double p : ladder) {
    const MeanDescriptor member = family.instance(p);
    MemberRefutation mr;
    mr.param = p;
    if (compare(member, candidate, grid, options.tol).verdict == Order::EQUAL) {
      mr.status = MemberStatus::identical;
      v.members.push_back(mr);
      continue;
    }
    const SigmaResult sm = sigma_best(member);
    mr.sigma_member = sm.value;
    mr.sigma_member_converged = sm.converged;
    const bool sigma_lower = sm.value < sc.value - options.sigma_margin;
    mr.witness = find_undercut(member, candidate, grid, options);
    if (mr.witness) {
      mr.status = MemberStatus::refuted;
      mr.via_sigma = sigma_lower && sm.converged && sc.converged;
      v.sigma_argument_used = v.sigma_argument_used || mr.via_sigma;
    } else if (sigma_lower) {
      mr.status = MemberStatus::inconclusive;
      any_inconclusive = true;
    } else {
      mr.status = MemberStatus::dominates;
      any_dominates = true;
    }
    v.members.push_back(mr);
  }
  v.dominated_by_none = !any_dominates && !any_inconclusive;

  if (!v.dominates_some_member || any_dominates) {
    v.verdict = Verdict::REFUTED;
  } else if (any_inconclusive) {
    v.verdict = Verdict::INCONCLUSIVE;
  } else {
    v.verdict = Verdict::SUPPORTED;
  }
  v.note =
      "numerical evidence over the sampled parameter ladder and grid, not a proof; the claim "
      "quantifies over every mean of the family";
  return v;
}

CancellationVerdict left_cancelling_verdict(const FamilyDescriptor& family,
                                            const MeanDescriptor& candidate,
                                            const std::vector<double>& ladder,
                                            const GridSpec& grid,
                                            const CancellationOptions& options) {
  auto v = cancelling_verdict(family.dualized_family(), dual(candidate), ladder, grid, options);
  v.candidate = candidate.expr();
  v.family = family.name();
  v.left = true;
  return v;
}

IdentityResidual stolarsky_lehmer_identity(double a, double b, double s) {
  if (s == 0.0 || !std::isfinite(s)) {
    throw std::domain_error("stolarsky_lehmer_identity: s must be finite and nonzero");
  }
  const auto p = CanonicalPoint::from_pair(a, b);
  IdentityResidual out;
  out.lhs = stolarsky(s, s).log_phi(p) - elementary('S').log_phi(p);
  // The pair (a^s, b^s) has half log-ratio |s| u.
  const auto q = CanonicalPoint::from_half_log_ratio(std::fabs(s) * p.half_log_ratio);
  const double log_ratio = lehmer(-1.0 / s).log_phi(q) - elementary('L').log_phi(q);
  out.rhs = std::expm1(log_ratio) / s;
  out.residual = out.lhs - out.rhs;
  out.relative = std::fabs(out.residual) / (std::fabs(out.lhs) + 1e-15);
  return out;
}

CubicRatio genlog_cubic_ratio(double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("genlog_cubic_ratio: need 0 < t < 1");
  CubicRatio out;
  out.direct = std::exp(3.0 * gen_log(3).log_phi(CanonicalPoint::from_t(t)));
  out.closed = 2.0 * t * (3.0 + t * t) / (6.0 * std::atanh(t));
  out.agree = std::fabs(out.direct - out.closed) <= 1e-12;
  return out;
}

double holder_gini_gap(double t) {
  // (1+t)log(1+t) + (1-t)log(1-t) = log(1-t^2) + 2t atanh(t)
  return std::log1p(t * t) - std::log1p(-t * t) - 2.0 * t * std::atanh(t);
}

double holder_gini_gap_d2(double t) {
  const double t2 = t * t;
  return -8.0 * t2 / ((1.0 + t2) * (1.0 - t2 * t2));
}

double holder_gini_gap_d2_numeric(double t, double h) {
  return (holder_gini_gap(t + h) - 2.0 * holder_gini_gap(t) + holder_gini_gap(t - h)) / (h * h);
}

}  // namespace meanlab
