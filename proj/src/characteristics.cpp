#include "meanlab/characteristics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mean_impl.hpp"

namespace meanlab {

using detail::near;

namespace {

double phi_at(const MeanDescriptor& m, const CanonicalPoint& p) {
  return m.kind() == MeanKind::custom ? m(p.lo, p.hi) : std::exp(m.log_phi(p));
}

}  // namespace

SigmaResult sigma(const MeanDescriptor& m, const SigmaOptions& options) {
  SigmaResult out;
  out.method = SigmaMethod::direct_limit;
  std::vector<double> s;
  for (int k = options.k_min; k <= options.k_max; ++k) {
    const double eps = std::pow(10.0, -k);
    const double v = phi_at(m, CanonicalPoint::from_t(1.0 - eps));
    if (!std::isfinite(v)) {
      throw EvaluationError("sigma: non-finite phi at epsilon " + detail::format_param(eps),
                            eps);
    }
    out.tail.emplace_back(eps, v);
    s.push_back(v);
  }
  for (std::size_t i = 2; i < s.size(); ++i) {
    const double d1 = s[i] - s[i - 1];
    const double d0 = s[i - 1] - s[i - 2];
    const double d2 = d1 - d0;
    out.extrapolates.push_back(d2 == 0.0 ? s[i] : s[i] - d1 * d1 / d2);
  }
  if (out.extrapolates.empty()) {
    out.value = std::clamp(s.back(), 0.0, 2.0);
    return out;
  }
  const double last = out.extrapolates.back();
  out.value = std::clamp(last, 0.0, 2.0);
  if (out.extrapolates.size() >= 2) {
    const double prev = out.extrapolates[out.extrapolates.size() - 2];
    out.converged = std::fabs(last - prev) <= options.tol * std::fabs(last);
  }
  return out;
}

double sigma_closed(const MeanDescriptor& m) {
  const auto par = m.params();
  switch (m.kind()) {
    case MeanKind::harmonic:
    case MeanKind::geometric:
    case MeanKind::logarithmic:
      return 0.0;
    case MeanKind::identric:
      return 2.0 / std::numbers::e;
    case MeanKind::arithmetic:
      return 1.0;
    case MeanKind::gini:
      return 2.0;
    case MeanKind::seiffert_p:
      return 2.0 / std::numbers::pi;
    case MeanKind::seiffert_t:
      return 4.0 / std::numbers::pi;
    case MeanKind::holder:
      if (par[0] > 0.0 && !near(par[0], 0.0)) return std::exp2(1.0 - 1.0 / par[0]);
      break;
    case MeanKind::stolarsky:
      if (near(par[0], par[1])) {
        const double s = 0.5 * (par[0] + par[1]);
        if (s > 0.0 && !near(s, 0.0)) return 2.0 * std::exp(-1.0 / s);
      }
      break;
    case MeanKind::kfamily:
      if (near(par[0], -1.0)) return 1.0;
      if (par[0] > -1.0) return 2.0;
      break;
    case MeanKind::power_transform:
      if (par[0] > 0.0 && !near(par[0], 0.0)) {
        const double s = par[0];
        return std::exp2(1.0 - 1.0 / s) * std::pow(sigma_closed(*m.base()), 1.0 / s);
      }
      break;
    default:
      break;
  }
  throw UnsupportedError("no closed-form characteristic number registered for " + m.expr());
}

SigmaResult sigma_best(const MeanDescriptor& m) {
  try {
    SigmaResult r;
    r.value = sigma_closed(m);
    r.converged = true;
    r.method = SigmaMethod::closed_form;
    return r;
  } catch (const UnsupportedError&) {
    return sigma(m);
  }
}

PhiSeries phi_series(const MeanDescriptor& m, int order) {
  if (order < 1) throw std::invalid_argument("phi_series: order must be at least 1");
  constexpr int kMinFitOrder = 5;
  constexpr double kWindow = 0.1;
  const int fit_order = std::max(order, kMinFitOrder);
  const int n_pos = 4 * fit_order;

  // Chebyshev-distributed samples on (0, window], mirrored; phi is even, so
  // the mirror rows duplicate the positive half.
  std::vector<double> ts;
  for (int j = 0; j < n_pos; ++j) {
    const double x = std::cos(std::numbers::pi * (j + 0.5) / (2.0 * n_pos));
    ts.push_back(kWindow * x);
    ts.push_back(-kWindow * x);
  }

  // Fit y = phi - 1 in z = (t/window)^2 to keep the design well conditioned.
  Eigen::MatrixXd design(ts.size(), fit_order);
  Eigen::VectorXd rhs(ts.size());
  std::vector<double> values(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double z = (ts[i] / kWindow) * (ts[i] / kWindow);
    double zk = 1.0;
    for (int k = 0; k < fit_order; ++k) {
      zk *= z;
      design(static_cast<Eigen::Index>(i), k) = zk;
    }
    values[i] = phi(m, ts[i]);
    rhs(static_cast<Eigen::Index>(i)) = values[i] - 1.0;
  }
  const Eigen::VectorXd b = design.colPivHouseholderQr().solve(rhs);

  std::vector<double> full(fit_order + 1, 1.0);
  for (int k = 1; k <= fit_order; ++k) {
    full[k] = b(k - 1) / std::pow(kWindow, 2 * k);
  }

  auto residual = [&](int upto) {
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double t2 = ts[i] * ts[i];
      double acc = 0.0;
      for (int k = upto; k >= 0; --k) acc = acc * t2 + full[k];
      worst = std::max(worst, std::fabs(values[i] - acc));
    }
    return worst;
  };

  PhiSeries out;
  out.coefficients.assign(full.begin(), full.begin() + order + 1);
  out.fit_order = fit_order;
  out.fit_window = kWindow;
  out.full_fit_residual = residual(fit_order);
  out.fit_residual = residual(order);
  out.flagged = out.full_fit_residual > 1e-8;
  return out;
}

ExponentResult comparison_exponent(const MeanDescriptor& m, const MeanDescriptor& n) {
  constexpr int kLevels = 7;
  ExponentResult out;
  std::vector<std::vector<double>> table(kLevels);
  for (int k = 0; k < kLevels; ++k) {
    const double t = 0.1 * std::ldexp(1.0, -k);
    const auto p = CanonicalPoint::from_t(t);
    const double g = (m.log_phi(p) - n.log_phi(p)) / (t * t);
    if (!std::isfinite(g)) {
      throw EvaluationError("comparison_exponent: non-finite ratio at t " +
                                detail::format_param(t),
                            t);
    }
    out.samples.push_back(g);
    table[k].push_back(g);
    // The error expands in even powers of t, so each level removes a
    // factor of 4^j.
    for (int j = 1; j <= k; ++j) {
      const double f = std::pow(4.0, j);
      table[k].push_back((f * table[k][j - 1] - table[k - 1][j - 1]) / (f - 1.0));
    }
    out.diagonal.push_back(table[k][k]);
  }
  out.value = out.diagonal.back();
  const double last_step = std::fabs(out.diagonal[kLevels - 1] - out.diagonal[kLevels - 2]);
  const double prev_step = std::fabs(out.diagonal[kLevels - 2] - out.diagonal[kLevels - 3]);
  const double floor = 1e-9 * std::max(1.0, std::fabs(out.value));
  out.converged = last_step <= floor || (last_step <= prev_step && last_step <= 1e-6);
  return out;
}

}  // namespace meanlab
