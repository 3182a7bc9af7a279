#include "meanlab/canonical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "numerics.hpp"

namespace meanlab {

namespace {

// Below this |t| the logs are formed from t directly; above it from the
// coordinates, which avoids cancellation in 1 - t^2 on both sides.
constexpr double kDirectLogBelow = 0.5;

CanonicalPoint from_abs_t(double t_signed, double scale) {
  CanonicalPoint p;
  p.t = t_signed;
  p.scale = scale;
  const double t = std::fabs(t_signed);
  p.abs_t = t;
  p.lo = 1.0 - t;
  p.hi = 1.0 + t;
  if (t < kDirectLogBelow) {
    p.log_lo = std::log1p(-t);
    p.log_hi = std::log1p(t);
    p.log_geo = 0.5 * std::log1p(-t * t);
    p.half_log_ratio = std::atanh(t);
  } else {
    p.log_lo = std::log(p.lo);
    p.log_hi = std::log(p.hi);
    p.log_geo = 0.5 * (p.log_lo + p.log_hi);
    p.half_log_ratio = 0.5 * (p.log_hi - p.log_lo);
  }
  return p;
}

}  // namespace

CanonicalPoint CanonicalPoint::from_pair(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("mean arguments must be positive and finite, got (" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  const double c = 0.5 * a + 0.5 * b;
  const double t = (b - a) / (a + b);
  if (std::fabs(t) < kDirectLogBelow) return from_abs_t(t, c);

  // The ratio is large: take the coordinates from a and b themselves so that
  // 1 - |t| keeps its relative accuracy even when it is far below eps.
  CanonicalPoint p;
  p.t = t;
  p.scale = c;
  p.abs_t = std::fabs(t);
  const double small = a < b ? a : b;
  const double large = a < b ? b : a;
  p.lo = small / c;
  p.hi = large / c;
  p.log_lo = std::log(small) - std::log(c);
  p.log_hi = std::log(large) - std::log(c);
  p.log_geo = 0.5 * (p.log_lo + p.log_hi);
  p.half_log_ratio = 0.5 * (std::log(large) - std::log(small));
  return p;
}

CanonicalPoint CanonicalPoint::from_t(double t) {
  if (!(std::fabs(t) < 1.0)) {
    throw std::domain_error("canonical parameter must satisfy |t| < 1, got " +
                            std::to_string(t));
  }
  return from_abs_t(t, 1.0);
}

CanonicalPoint CanonicalPoint::from_half_log_ratio(double u) {
  if (!(u >= 0.0) || !std::isfinite(u)) {
    throw std::domain_error("half log-ratio must be finite and nonnegative");
  }
  if (u < 0.5) return from_abs_t(std::tanh(u), 1.0);
  CanonicalPoint p;
  p.t = std::tanh(u);
  p.abs_t = p.t;
  // 1 -+ tanh(u) = 2 / (1 + e^{+-2u})
  p.log_lo = detail::kLn2 - detail::softplus(2.0 * u);
  p.log_hi = detail::kLn2 - detail::softplus(-2.0 * u);
  p.lo = std::exp(p.log_lo);
  p.hi = std::exp(p.log_hi);
  p.log_geo = -detail::log_cosh(u);
  p.half_log_ratio = u;
  return p;
}

}  // namespace meanlab
