#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "meanlab/mean.hpp"

namespace meanlab {

/// Raised by sigma_closed when no closed form is registered for a mean.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a limit computation meets a non-finite sample.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double at)
      : std::runtime_error(what), at_(at) {}
  double at() const { return at_; }

 private:
  double at_;
};

enum class SigmaMethod { direct_limit, closed_form };

/// Characteristic number sigma(M) = lim_{t -> 1-} phi_M(t) = M(0+, 2).
struct SigmaResult {
  double value = 0.0;  ///< clamped to [0, 2]
  bool converged = false;
  std::vector<std::pair<double, double>> tail;  ///< (epsilon, phi(1 - epsilon))
  std::vector<double> extrapolates;             ///< Aitken estimates along the tail
  SigmaMethod method = SigmaMethod::direct_limit;
};

struct SigmaOptions {
  int k_min = 2;   ///< epsilon = 10^-k for k = k_min..k_max
  int k_max = 10;
  double tol = 1e-9;
};

/// Samples phi at t = 1 - 10^-k and accelerates with Aitken's delta-squared.
/// The result is reported as converged only when the last two extrapolates
/// agree to `tol` relative to the value, so limits of zero (and logarithmic
/// decay) come back flagged with their best extrapolate.
SigmaResult sigma(const MeanDescriptor& m, const SigmaOptions& options = {});

/// Registered closed forms: the elementary means, A_s and I_{s,s} for s > 0,
/// K_r for r > -1, and M_s for s > 0 whenever sigma(M) itself has a closed
/// form. Anything else throws UnsupportedError.
double sigma_closed(const MeanDescriptor& m);

/// sigma_closed when registered, else the direct limit.
SigmaResult sigma_best(const MeanDescriptor& m);

/// Even power series phi(t) = sum_k a_k t^{2k} fitted on |t| <= window.
struct PhiSeries {
  std::vector<double> coefficients;  ///< a_0 .. a_order, a_0 pinned to 1
  double fit_residual = 0.0;  ///< max |phi - truncated series| on the samples
  double full_fit_residual = 0.0;  ///< same, for the internal higher-order fit
  double fit_window = 0.1;
  int fit_order = 0;   ///< order of the internal fit
  bool flagged = false;  ///< full_fit_residual above 1e-8
};

/// Constrained least-squares fit (a_0 = 1) of an even polynomial to phi on
/// symmetric samples of [-0.1, 0.1]. The internal fit uses at least order 5
/// so that the low coefficients are not biased by truncation; the first
/// `order` coefficients are returned. Throws std::invalid_argument if
/// order < 1.
PhiSeries phi_series(const MeanDescriptor& m, int order);

struct ExponentResult {
  double value = 0.0;
  bool converged = false;
  std::vector<double> samples;  ///< log(phi_m/phi_n)/t^2 at t = 0.1 * 2^-k
  std::vector<double> diagonal;  ///< Richardson diagonal
};

/// c = lim_{t -> 0} log(m/n)(1 - t, 1 + t) / t^2 by Richardson extrapolation
/// over t = 0.1 * 2^-k, k = 0..6. c > 0 means m lies above n near the
/// diagonal.
ExponentResult comparison_exponent(const MeanDescriptor& m, const MeanDescriptor& n);

}  // namespace meanlab
