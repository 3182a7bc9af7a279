#include "meanlab/mean.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "mean_impl.hpp"
#include "numerics.hpp"

namespace meanlab {

using detail::langevin;
using detail::log_abs_expm1;
using detail::log_cosh;
using detail::log_sinhc;

namespace detail {

std::string format_param(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool near(double x, double target) { return std::fabs(x - target) < kBranchProximity; }

}  // namespace detail

using detail::near;

namespace {

double lambda_generic(double s, const CanonicalPoint& p) {
  const double lg = p.log_geo;
  const double u = p.half_log_ratio;
  // log A_q^q at the canonical pair; both numerator and denominator of
  // lambda_s are 2 expm1 of this quantity.
  auto q_log = [&](double q) { return q * lg + log_cosh(q * u); };
  return std::log(std::fabs((s - 1.0) / (s + 1.0))) + log_abs_expm1(q_log(s + 1.0)) -
         log_abs_expm1(q_log(s));
}

double stolarsky_log_phi(double r, double s, const CanonicalPoint& p) {
  const double lg = p.log_geo;
  const double u = p.half_log_ratio;
  if (near(r, 0.0) && near(s, 0.0)) return lg;
  if (near(r, s)) {
    // exp(-1/s + (x^s log x - y^s log y)/(x^s - y^s))
    const double m = 0.5 * (r + s);
    if (near(m, 0.0)) return lg;
    return lg + u * langevin(m * u);
  }
  if (near(r, 0.0)) return lg + log_sinhc(s * u) / s;
  if (near(s, 0.0)) return lg + log_sinhc(r * u) / r;
  return lg + (log_sinhc(s * u) - log_sinhc(r * u)) / (s - r);
}

// Below this |t| the ratios atanh(t)/t, atan(t)/t and asin(t)/t are summed
// as series so their logs keep full relative accuracy.
constexpr double kRatioSeriesBound = 0.5;

/// f(t)/t - 1 for f with Maclaurin coefficients a_k of t^{2k+1}, a_0 = 1,
/// where next(a_{k-1}, k) gives a_k.
template <class Next>
double odd_ratio_minus_one(double t, Next next) {
  const double t2 = t * t;
  double a = 1.0;
  double pw = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 80; ++k) {
    a = next(a, k);
    pw *= t2;
    const double term = a * pw;
    sum += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

double atanh_ratio_m1(double t) {
  return odd_ratio_minus_one(t, [](double, int k) { return 1.0 / (2 * k + 1); });
}

double atan_ratio_m1(double t) {
  return odd_ratio_minus_one(t, [](double, int k) { return (k % 2 ? -1.0 : 1.0) / (2 * k + 1); });
}

double asin_ratio_m1(double t) {
  return odd_ratio_minus_one(t, [](double a, int k) {
    return a * (2.0 * k - 1.0) * (2.0 * k - 1.0) / ((2.0 * k) * (2.0 * k + 1.0));
  });
}

double log_phi_logarithmic(double t, double u) {
  if (t < kRatioSeriesBound) return -std::log1p(atanh_ratio_m1(t));
  return std::log(t) - std::log(u);
}

/// ((1-t)^k + (1+t)^k - 2) / (k (k-1) t^2) - 1, analytic in k; the summand
/// of t^{2j} is 2 C(k, 2j+2) / (k (k-1)).
double power_gap_ratio_m1(double k, double t) {
  const double t2 = t * t;
  double term = 1.0;
  double sum = 0.0;
  for (int j = 1; j < 400; ++j) {
    term *= (k - 2.0 * j) * (k - 2.0 * j - 1.0) / ((2.0 * j + 1.0) * (2.0 * j + 2.0)) * t2;
    sum += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

// log phi of the Gini mean S, also the quantity a log a + b log b - (a+b) log A
// at the canonical pair, halved.
double gini_log_phi(const CanonicalPoint& p) { return p.log_geo + p.abs_t * p.half_log_ratio; }

double direct_log_phi(const MeanDescriptor& m, const CanonicalPoint& p) {
  const double t = p.abs_t;
  const double lg = p.log_geo;
  const double u = p.half_log_ratio;
  const auto par = m.params();
  switch (m.kind()) {
    case MeanKind::harmonic:
      return 2.0 * lg;
    case MeanKind::geometric:
      return lg;
    case MeanKind::logarithmic:
      return log_phi_logarithmic(t, u);
    case MeanKind::identric:
      if (t < kRatioSeriesBound) return atanh_ratio_m1(t) + lg;
      return u / t + lg - 1.0;
    case MeanKind::arithmetic:
      return 0.0;
    case MeanKind::gini:
      return gini_log_phi(p);
    case MeanKind::seiffert_p:
      if (t < kRatioSeriesBound) return -std::log1p(asin_ratio_m1(t));
      return std::log(t) - std::log(std::atan2(t, std::exp(lg)));
    case MeanKind::seiffert_t:
      if (t < kRatioSeriesBound) return -std::log1p(atan_ratio_m1(t));
      return std::log(t) - std::log(std::atan(t));
    case MeanKind::holder: {
      const double s = par[0];
      if (near(s, 0.0)) return lg;
      return lg + log_cosh(s * u) / s;
    }
    case MeanKind::lehmer: {
      const double r = par[0];
      return lg + log_cosh((r + 1.0) * u) - log_cosh(r * u);
    }
    case MeanKind::genlog: {
      const double q = par[0];
      if (near(q, 0.0)) return lg;
      if (near(q, 1.0)) return log_phi_logarithmic(t, u);
      return lg + log_sinhc(q * u) / q;
    }
    case MeanKind::stolarsky:
      return stolarsky_log_phi(par[0], par[1], p);
    case MeanKind::lambda: {
      const double s = par[0];
      if (t < kRatioSeriesBound && (std::fabs(s) + 2.0) * t < 6.0) {
        // phi = R_{s+1} / R_s with R_k = ((1-t)^k + (1+t)^k - 2) / (k (k-1) t^2).
        return std::log1p(power_gap_ratio_m1(s + 1.0, t)) - std::log1p(power_gap_ratio_m1(s, t));
      }
      if (near(s, -1.0)) return std::log(-2.0 * lg) + 2.0 * lg - 2.0 * std::log(t);
      if (near(s, 0.0)) return std::log(gini_log_phi(p)) - std::log(-lg);
      if (near(s, 1.0)) return 2.0 * std::log(t) - detail::kLn2 - std::log(gini_log_phi(p));
      return lambda_generic(s, p);
    }
    case MeanKind::kfamily: {
      const double r = par[0];
      if (near(r, 0.0)) return gini_log_phi(p);
      if (near(r, -1.0)) return 0.0;
      return ((r + 1.0) * lg + log_cosh((r + 1.0) * u)) / r;
    }
    case MeanKind::power_transform: {
      const double s = par[0];
      if (near(s, 0.0)) return lg;
      const auto inner = CanonicalPoint::from_half_log_ratio(std::fabs(s) * u);
      const double log_scale = s * lg + log_cosh(s * u);
      return (log_scale + m.base()->log_phi(inner)) / s;
    }
    case MeanKind::dual:
      return 2.0 * lg - m.base()->log_phi(p);
    case MeanKind::custom:
      break;
  }
  throw std::logic_error("direct_log_phi: unhandled kind");
}

// Beyond this half log-ratio log phi is assembled as k u + r with the slope k
// taken exactly from the parameters, so terms of size u never cancel in
// floating point.
constexpr double kLargeRatio = 4.0;

struct Split {
  double k = 0.0;
  double r = 0.0;
  double value(double u) const { return k == 0.0 ? r : k * u + r; }
};

Split split_log_phi(const MeanDescriptor& m, const CanonicalPoint& p);

// q log G + log cosh(q u) = (|q| - q) u + [E(q u) - q E(u)], E the log cosh
// excess; the bracket is bounded.
Split power_sum_log(double q, double u, double eu) {
  return {q >= 0.0 ? 0.0 : -2.0 * q, detail::log_cosh_excess(q * u) - q * eu};
}

// log|expm1| of power_sum_log(q), split the same way.
Split log_abs_expm1_split(double q, double u, double eu) {
  const Split s = power_sum_log(q, u, eu);
  if (s.k == 0.0) return {0.0, log_abs_expm1(s.r)};
  const double full = s.value(u);
  return {s.k, s.r + std::log(-std::expm1(-full))};
}

Split split_log_phi(const MeanDescriptor& m, const CanonicalPoint& p) {
  using detail::log_cosh_excess;
  using detail::log_sinhc_excess;
  const double u = p.half_log_ratio;
  const double t = p.abs_t;
  const double eu = log_cosh_excess(u);
  const Split geo{-1.0, -eu};
  // log S at the pair, i.e. log G + t u
  const double gini = -eu - u * p.lo;
  const auto par = m.params();
  switch (m.kind()) {
    case MeanKind::harmonic:
      return {-2.0, -2.0 * eu};
    case MeanKind::geometric:
      return geo;
    case MeanKind::logarithmic:
      return {0.0, std::log(t) - std::log(u)};
    case MeanKind::identric:
      return {0.0, u * p.lo / t - eu - 1.0};
    case MeanKind::arithmetic:
      return {0.0, 0.0};
    case MeanKind::gini:
      return {0.0, gini};
    case MeanKind::seiffert_p:
    case MeanKind::seiffert_t:
      return {0.0, direct_log_phi(m, p)};
    case MeanKind::custom:
      return {0.0, m.log_phi(p)};
    case MeanKind::holder: {
      const double s = par[0];
      if (near(s, 0.0)) return geo;
      return {s > 0.0 ? 0.0 : -2.0, -eu + log_cosh_excess(s * u) / s};
    }
    case MeanKind::lehmer: {
      const double r = par[0];
      const double k = r >= 0.0 ? 0.0 : (r >= -1.0 ? 2.0 * r : -2.0);
      return {k, -eu + log_cosh_excess((r + 1.0) * u) - log_cosh_excess(r * u)};
    }
    case MeanKind::genlog: {
      const double q = par[0];
      if (near(q, 0.0)) return geo;
      if (near(q, 1.0)) return {0.0, std::log(t) - std::log(u)};
      return {q > 0.0 ? 0.0 : -2.0, -eu + log_sinhc_excess(q * u) / q};
    }
    case MeanKind::stolarsky: {
      const double r = par[0];
      const double s = par[1];
      auto genlog_split = [&](double q) -> Split {
        return {q > 0.0 ? 0.0 : -2.0, -eu + log_sinhc_excess(q * u) / q};
      };
      if (near(r, 0.0) && near(s, 0.0)) return geo;
      if (near(r, s)) {
        const double mid = 0.5 * (r + s);
        if (near(mid, 0.0)) return geo;
        return {mid > 0.0 ? 0.0 : -2.0, -eu + detail::scaled_langevin_excess(mid, u)};
      }
      if (near(r, 0.0)) return genlog_split(s);
      if (near(s, 0.0)) return genlog_split(r);
      const double k = r >= 0.0 ? 0.0 : (s <= 0.0 ? -2.0 : 2.0 * r / (s - r));
      return {k, -eu + (log_sinhc_excess(s * u) - log_sinhc_excess(r * u)) / (s - r)};
    }
    case MeanKind::lambda: {
      const double s = par[0];
      // lg = -(u + eu)
      if (near(s, -1.0)) return {-2.0, std::log(2.0 * (u + eu)) - 2.0 * eu - 2.0 * std::log(t)};
      if (near(s, 0.0)) return {0.0, std::log(gini) - std::log(u + eu)};
      if (near(s, 1.0)) return {0.0, 2.0 * std::log(t) - detail::kLn2 - std::log(gini)};
      const Split top = log_abs_expm1_split(s + 1.0, u, eu);
      const Split bottom = log_abs_expm1_split(s, u, eu);
      const double k = s >= 0.0 ? 0.0 : (s >= -1.0 ? 2.0 * s : -2.0);
      return {k, std::log(std::fabs((s - 1.0) / (s + 1.0))) + top.r - bottom.r};
    }
    case MeanKind::kfamily: {
      const double r = par[0];
      if (near(r, 0.0)) return {0.0, gini};
      if (near(r, -1.0)) return {0.0, 0.0};
      const Split q = power_sum_log(r + 1.0, u, eu);
      return {q.k / r, q.r / r};
    }
    case MeanKind::power_transform: {
      const double s = par[0];
      if (near(s, 0.0)) return geo;
      const auto inner_point = CanonicalPoint::from_half_log_ratio(std::fabs(s) * u);
      const Split inner = std::fabs(s) * u >= kLargeRatio
                              ? split_log_phi(*m.base(), inner_point)
                              : Split{0.0, m.base()->log_phi(inner_point)};
      const Split scale = power_sum_log(s, u, eu);
      // inner slope is per unit of |s| u
      const double k = s > 0.0 ? inner.k : -2.0 - inner.k;
      return {k, (scale.r + inner.r) / s};
    }
    case MeanKind::dual: {
      const Split b = split_log_phi(*m.base(), p);
      return {-2.0 - b.k, -2.0 * eu - b.r};
    }
  }
  throw std::logic_error("split_log_phi: unhandled kind");
}

std::optional<std::array<double, 2>> series_of(const MeanDescriptor& m) {
  using Coeffs = std::array<double, 2>;
  const auto par = m.params();
  switch (m.kind()) {
    case MeanKind::harmonic:
      return Coeffs{-1.0, -0.5};
    case MeanKind::geometric:
      return Coeffs{-0.5, -0.25};
    case MeanKind::logarithmic:
      return Coeffs{-1.0 / 3.0, -13.0 / 90.0};
    case MeanKind::identric:
      return Coeffs{-1.0 / 6.0, -1.0 / 20.0};
    case MeanKind::arithmetic:
      return Coeffs{0.0, 0.0};
    case MeanKind::gini:
      return Coeffs{0.5, 1.0 / 12.0};
    case MeanKind::seiffert_p:
      return Coeffs{-1.0 / 6.0, -11.0 / 180.0};
    case MeanKind::seiffert_t:
      return Coeffs{1.0 / 3.0, -13.0 / 90.0};
    case MeanKind::holder: {
      const double s = par[0];
      return Coeffs{0.5 * (s - 1.0), -0.25 + s / 3.0 - s * s * s / 12.0};
    }
    case MeanKind::lehmer: {
      const double r = par[0];
      const double r4 = r * r * r * r;
      const double q4 = std::pow(r + 1.0, 4);
      return Coeffs{r, -0.25 + (2.0 * r + 1.0) / 3.0 - (q4 - r4) / 12.0};
    }
    case MeanKind::genlog:
    case MeanKind::stolarsky: {
      const double r = m.kind() == MeanKind::genlog ? 0.0 : par[0];
      const double s = m.kind() == MeanKind::genlog ? par[0] : par[1];
      const double sum = r + s;
      return Coeffs{(sum - 3.0) / 6.0, -0.25 + sum / 9.0 - sum * (r * r + s * s) / 180.0};
    }
    case MeanKind::lambda: {
      const double s = par[0];
      return Coeffs{(s - 2.0) / 6.0, -(s - 2.0) * (s * s + 8.0 * s - 28.0) / 360.0};
    }
    case MeanKind::kfamily: {
      const double r = par[0];
      return Coeffs{0.5 * (r + 1.0), -(r + 1.0) * (r * r + 3.0 * r - 1.0) / 12.0};
    }
    case MeanKind::power_transform: {
      const auto inner = m.base()->log_phi_series();
      if (!inner) return std::nullopt;
      const double s = par[0];
      if (near(s, 0.0)) return Coeffs{-0.5, -0.25};
      const double b1 = (*inner)[0];
      const double b2 = (*inner)[1];
      const double s2 = s * s;
      const double s4 = s2 * s2;
      return Coeffs{0.5 * (s - 1.0) + b1 * s,
                    (-0.25 * s + s2 / 3.0 - s4 / 12.0 + (2.0 / 3.0) * b1 * s2 * (1.0 - s2) +
                     b2 * s4) /
                        s};
    }
    case MeanKind::dual: {
      const auto inner = m.base()->log_phi_series();
      if (!inner) return std::nullopt;
      return Coeffs{-1.0 - (*inner)[0], -0.5 - (*inner)[1]};
    }
    case MeanKind::custom:
      return std::nullopt;
  }
  return std::nullopt;
}

MeanDescriptor make_node(MeanKind kind, std::vector<double> params,
                         std::optional<MeanDescriptor> base = std::nullopt) {
  auto node = std::make_shared<MeanDescriptor::Node>();
  node->kind = kind;
  node->params = std::move(params);
  node->base = std::move(base);
  return MeanDescriptor(std::move(node));
}

}  // namespace

namespace detail {

MeanDescriptor make_parametric(MeanKind kind, std::vector<double> params,
                               std::optional<MeanDescriptor> base) {
  for (double v : params) {
    if (!std::isfinite(v) || std::fabs(v) > kParameterClamp) {
      throw std::domain_error("mean parameter " + format_param(v) + " outside [-" +
                              format_param(kParameterClamp) + ", " +
                              format_param(kParameterClamp) + "]");
    }
  }
  return make_node(kind, std::move(params), std::move(base));
}

}  // namespace detail

MeanDescriptor::MeanDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

MeanKind MeanDescriptor::kind() const { return node_->kind; }
std::span<const double> MeanDescriptor::params() const { return node_->params; }
const MeanDescriptor* MeanDescriptor::base() const {
  return node_->base ? &*node_->base : nullptr;
}
const Stabilization& MeanDescriptor::stabilization() const { return node_->stabilization; }

std::string MeanDescriptor::expr() const {
  using detail::format_param;
  const auto& par = node_->params;
  switch (node_->kind) {
    case MeanKind::harmonic: return "H";
    case MeanKind::geometric: return "G";
    case MeanKind::logarithmic: return "L";
    case MeanKind::identric: return "I";
    case MeanKind::arithmetic: return "A";
    case MeanKind::gini: return "S";
    case MeanKind::seiffert_p: return "P";
    case MeanKind::seiffert_t: return "T";
    case MeanKind::holder: return "holder(" + format_param(par[0]) + ")";
    case MeanKind::lehmer: return "lehmer(" + format_param(par[0]) + ")";
    case MeanKind::genlog: return "genlog(" + format_param(par[0]) + ")";
    case MeanKind::stolarsky:
      return "stolarsky(" + format_param(par[0]) + "," + format_param(par[1]) + ")";
    case MeanKind::lambda: return "lambda(" + format_param(par[0]) + ")";
    case MeanKind::kfamily: return "k(" + format_param(par[0]) + ")";
    case MeanKind::power_transform:
      return "pow(" + base()->expr() + "," + format_param(par[0]) + ")";
    case MeanKind::dual: return "dual(" + base()->expr() + ")";
    case MeanKind::custom: return node_->custom_name;
  }
  return "?";
}

double MeanDescriptor::operator()(double a, double b) const {
  if (node_->kind == MeanKind::custom) return node_->custom_fn(a, b);
  const auto p = CanonicalPoint::from_pair(a, b);
  if (a == b) return a;
  return p.scale * std::exp(log_phi(p));
}

double MeanDescriptor::log_phi(const CanonicalPoint& p) const {
  if (node_->kind == MeanKind::custom) {
    return std::log(node_->custom_fn(p.t >= 0 ? p.lo : p.hi, p.t >= 0 ? p.hi : p.lo));
  }
  if (p.abs_t == 0.0) return 0.0;
  if (p.half_log_ratio >= kLargeRatio) return split_log_phi(*this, p).value(p.half_log_ratio);
  if (p.abs_t < node_->stabilization.threshold / parameter_scale()) {
    if (const auto c = series_of(*this)) {
      const double t2 = p.abs_t * p.abs_t;
      const double order2 = node_->stabilization.series_order >= 2 ? (*c)[1] : 0.0;
      return t2 * ((*c)[0] + t2 * order2);
    }
  }
  return direct_log_phi(*this, p);
}

std::optional<std::array<double, 2>> MeanDescriptor::log_phi_series() const {
  return series_of(*this);
}

// The truncated series error grows like (scale t)^6.
double MeanDescriptor::parameter_scale() const {
  double scale = 1.0;
  for (double v : params()) scale = std::max(scale, std::fabs(v));
  if (const auto* inner = base()) {
    const double s = inner->parameter_scale();
    scale = kind() == MeanKind::power_transform ? scale * s : std::max(scale, s);
  }
  return scale;
}

MeanDescriptor MeanDescriptor::with_stabilization(Stabilization s) const {
  auto node = std::make_shared<Node>(*node_);
  node->stabilization = s;
  if (node->base) node->base = node->base->with_stabilization(s);
  return MeanDescriptor(std::move(node));
}

MeanDescriptor MeanDescriptor::elementary(MeanKind kind) {
  switch (kind) {
    case MeanKind::harmonic:
    case MeanKind::geometric:
    case MeanKind::logarithmic:
    case MeanKind::identric:
    case MeanKind::arithmetic:
    case MeanKind::gini:
    case MeanKind::seiffert_p:
    case MeanKind::seiffert_t:
      return make_node(kind, {});
    default:
      throw std::invalid_argument("not an elementary mean kind");
  }
}

MeanDescriptor MeanDescriptor::custom(std::string name, CustomFn fn) {
  auto node = std::make_shared<Node>();
  node->kind = MeanKind::custom;
  node->custom_name = std::move(name);
  node->custom_fn = std::move(fn);
  return MeanDescriptor(std::move(node));
}

MeanDescriptor elementary(char letter) {
  switch (letter) {
    case 'H': return MeanDescriptor::elementary(MeanKind::harmonic);
    case 'G': return MeanDescriptor::elementary(MeanKind::geometric);
    case 'L': return MeanDescriptor::elementary(MeanKind::logarithmic);
    case 'I': return MeanDescriptor::elementary(MeanKind::identric);
    case 'A': return MeanDescriptor::elementary(MeanKind::arithmetic);
    case 'S': return MeanDescriptor::elementary(MeanKind::gini);
    case 'P': return MeanDescriptor::elementary(MeanKind::seiffert_p);
    case 'T': return MeanDescriptor::elementary(MeanKind::seiffert_t);
    default:
      throw std::invalid_argument(std::string("unknown elementary mean '") + letter + "'");
  }
}

MeanDescriptor dual(const MeanDescriptor& m) {
  if (m.kind() == MeanKind::dual) return *m.base();
  if (m.kind() == MeanKind::custom) {
    return MeanDescriptor::custom("dual(" + m.expr() + ")",
                                  [m](double a, double b) { return a * b / m(a, b); });
  }
  return make_node(MeanKind::dual, {}, m);
}

double phi(const MeanDescriptor& m, double t) {
  const auto p = CanonicalPoint::from_t(t);
  if (m.kind() == MeanKind::custom) return m(1.0 - t, 1.0 + t);
  return std::exp(m.log_phi(p));
}

double eval(const MeanDescriptor& m, double a, double b) { return m(a, b); }

MeanAxiomReport validate_mean(const MeanDescriptor& m, const GridSpec& grid, double tol) {
  MeanAxiomReport report;
  auto rel = [](double x, double y) {
    const double scale = std::max(std::fabs(x), std::fabs(y));
    return scale == 0.0 ? 0.0 : std::fabs(x - y) / scale;
  };
  for (double t : grid.t_values) {
    const double a = 1.0 - t;
    const double b = 1.0 + t;
    const double v = m(a, b);
    const double v_swapped = m(b, a);

    const double lo_excess = (a - v) / a;
    const double hi_excess = (v - b) / b;
    const double between = std::isfinite(v) ? std::max({0.0, lo_excess, hi_excess})
                                            : std::numeric_limits<double>::infinity();
    report.betweenness_max_violation = std::max(report.betweenness_max_violation, between);
    if (between > tol) report.betweenness_violations.push_back({a, b, v});

    const double sym = rel(v, v_swapped);
    report.symmetry_max_violation = std::max(report.symmetry_max_violation, sym);
    if (sym > tol) report.symmetry_violations.push_back({a, b, v_swapped});

    for (double k : grid.scale_factors) {
      const double scaled = m(k * a, k * b);
      const double hom = rel(scaled, k * v);
      report.homogeneity_max_violation = std::max(report.homogeneity_max_violation, hom);
      if (hom > tol) report.homogeneity_violations.push_back({k * a, k * b, scaled});
    }
  }
  for (double x : {1e-3, 0.7, 1.0, 3.0, 1e3}) {
    if (m(x, x) != x) report.reflexivity_ok = false;
  }
  return report;
}

}  // namespace meanlab
