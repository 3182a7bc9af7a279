#pragma once

namespace meanlab {

/// A pair of positive reals expressed on the canonical line:
/// (a, b) = (c(1 - t), c(1 + t)) with t = (b - a)/(a + b) and c = (a + b)/2.
///
/// Besides t and c the point carries the logarithms of both canonical
/// coordinates and the half log-ratio atanh|t|, computed so that they stay
/// accurate when |t| rounds to 1 in binary64. Every mean in the library is
/// evaluated from these fields rather than from t alone.
struct CanonicalPoint {
  double t = 0.0;      ///< signed ratio parameter in [-1, 1]
  double scale = 1.0;  ///< c, the arithmetic mean of the pair

  double abs_t = 0.0;        ///< |t|
  double lo = 1.0;           ///< 1 - |t|
  double hi = 1.0;           ///< 1 + |t|
  double log_lo = 0.0;       ///< log(1 - |t|)
  double log_hi = 0.0;       ///< log(1 + |t|)
  double log_geo = 0.0;      ///< log sqrt(1 - t^2), i.e. log of G at the pair
  double half_log_ratio = 0.0;  ///< atanh|t| = log(hi/lo)/2

  /// Canonical form of (a, b). Throws std::domain_error unless a, b > 0.
  static CanonicalPoint from_pair(double a, double b);
  /// Pair (1 - t, 1 + t). Throws std::domain_error unless |t| < 1.
  static CanonicalPoint from_t(double t);
  /// Pair with log(hi/lo) = 2u, u >= 0. Valid for any finite u, including
  /// ratios far outside the binary64 range.
  static CanonicalPoint from_half_log_ratio(double u);

  /// Reconstructed arguments at the stored scale.
  double a() const { return scale * (t >= 0 ? lo : hi); }
  double b() const { return scale * (t >= 0 ? hi : lo); }
};

}  // namespace meanlab
