#pragma once

// Scalar kernels shared by the mean implementations. Each one is written to
// keep full relative accuracy near zero and to avoid overflow for large
// arguments.

#include <cmath>
#include <limits>

namespace meanlab::detail {

inline constexpr double kLn2 = 0.69314718055994530942;

/// log(1 + e^x)
inline double softplus(double x) {
  if (x > 36.0) return x + std::exp(-x);
  if (x < -36.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

/// log cosh(z)
inline double log_cosh(double z) {
  z = std::fabs(z);
  if (z < 20.0) {
    const double s = std::sinh(0.5 * z);
    return std::log1p(2.0 * s * s);
  }
  return z - kLn2 + std::log1p(std::exp(-2.0 * z));
}

/// log(sinh(y)/y), even in y
inline double log_sinhc(double y) {
  y = std::fabs(y);
  if (y < 1.0) {
    // sinh(y)/y - 1 = sum y^{2k}/(2k+1)!, all terms positive
    const double y2 = y * y;
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 30; ++k) {
      term *= y2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
      if (term <= 1e-18 * sum) break;
    }
    return std::log1p(sum);
  }
  if (y < 20.0) return std::log(std::sinh(y) / y);
  return y - std::log(2.0 * y) + std::log1p(-std::exp(-2.0 * y));
}

/// Langevin function coth(y) - 1/y, odd in y
inline double langevin(double y) {
  const double ay = std::fabs(y);
  if (ay < 1.0) {
    // y cosh(y) - sinh(y) = sum 2k y^{2k+1}/(2k+1)!, all terms of one sign
    const double y2 = y * y;
    double fact = y;  // y^{2k+1}/(2k+1)!
    double sum = 0.0;
    for (int k = 1; k < 30; ++k) {
      fact *= y2 / ((2.0 * k) * (2.0 * k + 1.0));
      const double term = 2.0 * k * fact;
      sum += term;
      if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
    }
    return sum / (y * std::sinh(y));
  }
  return 1.0 / std::tanh(y) - 1.0 / y;
}

/// log cosh(z) - |z|, in [-ln 2, 0]
inline double log_cosh_excess(double z) {
  z = std::fabs(z);
  if (z < 1.0) return log_cosh(z) - z;
  return -kLn2 + std::log1p(std::exp(-2.0 * z));
}

/// log(sinh(y)/y) - |y|
inline double log_sinhc_excess(double y) {
  y = std::fabs(y);
  if (y < 1.0) return log_sinhc(y) - y;
  return -kLn2 - std::log(y) + std::log1p(-std::exp(-2.0 * y));
}

/// u (langevin(m u) - sign(m)), for u > 0 and m != 0
inline double scaled_langevin_excess(double m, double u) {
  const double sign = m > 0.0 ? 1.0 : -1.0;
  const double z = std::fabs(m * u);
  if (z < 1.0) return u * langevin(m * u) - sign * u;
  // coth(z) - 1 = 2 / (e^{2z} - 1)
  return -1.0 / m + sign * u * 2.0 / std::expm1(2.0 * z);
}

/// log|e^q - 1|
inline double log_abs_expm1(double q) {
  if (q > 0.0) return q + std::log(-std::expm1(-q));
  if (q < 0.0) return std::log(-std::expm1(q));
  return -std::numeric_limits<double>::infinity();
}

}  // namespace meanlab::detail
