#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "meanlab/characteristics.hpp"
#include "meanlab/families.hpp"
#include "meanlab/grid.hpp"
#include "meanlab/mean.hpp"

namespace meanlab {

/// Pointwise equality tolerance: |m - n| <= kCompareTol * max(m, n).
inline constexpr double kCompareTol = 1e-11;
/// Strictness resolution: a separation of M and N counts as strict at t when
/// it exceeds kStrictResolution * (s_M (t^2 + |log phi_M|) + s_N (t^2 + |log phi_N|)),
/// s being parameter_scale(). Each term is the log phi error bound of one
/// side, so evaluation error alone cannot produce a strict separation.
inline constexpr double kStrictResolution = 16 * std::numeric_limits<double>::epsilon();

enum class Order { LE, GE, CROSSING, EQUAL };
std::string to_string(Order o);

/// A grid point where m and n are separated beyond tolerance. `a` and `b`
/// are the pair at scale c = 1, i.e. (1 - t, 1 + t).
struct Witness {
  double t = 0.0;
  double a = 0.0;
  double b = 0.0;
  double m_value = 0.0;
  double n_value = 0.0;
  double half_log_ratio = 0.0;  ///< atanh t, exact even where t rounds to 1
  bool m_above = false;         ///< m > n at this point
};

struct PointSample {
  double t;
  double a;
  double b;
  double lhs;
  double rhs;
};

struct OrderingReport {
  Order verdict = Order::EQUAL;
  /// Largest relative excess against the verdict: of m over n for LE,
  /// CROSSING and EQUAL; of n over m for GE.
  double max_violation = 0.0;
  /// Points separated beyond tolerance. Empty for LE and EQUAL; the points
  /// with m > n for GE; both directions, sorted by t, for CROSSING.
  std::vector<Witness> witnesses;
  /// LE/GE only: at every grid point the separation in the claimed
  /// direction exceeds the kStrictResolution margin.
  bool strict = false;
  /// LE/GE only: grid points where the separation exceeds `tol` relative.
  /// Means agree to second order at the diagonal, so points with small t
  /// fall below any fixed margin.
  std::size_t flat_margin_points = 0;
  std::vector<PointSample> samples;
};

/// Classifies m against n on the canonical pairs of the grid.
OrderingReport compare(const MeanDescriptor& m, const MeanDescriptor& n, const GridSpec& grid,
                       double tol = kCompareTol);

struct ChainReport {
  std::vector<OrderingReport> links;  ///< compare(means[i], means[i+1])
  bool passed = false;                ///< every link LE
};

/// Throws std::invalid_argument for fewer than two means.
ChainReport verify_chain(const std::vector<MeanDescriptor>& means, const GridSpec& grid,
                         double tol = kCompareTol);

struct MonotonicityReport {
  std::vector<double> ladder;  ///< sorted
  std::vector<OrderingReport> links;
  bool passed = false;
};

/// instance(p) <= instance(q) for adjacent p < q of the ladder.
MonotonicityReport monotone_in_param(const FamilyDescriptor& family, std::vector<double> ladder,
                                     const GridSpec& grid, double tol = kCompareTol);

enum class BoundDirection {
  sup_le,  ///< largest p with instance(p) <= target
  inf_ge,  ///< smallest p with instance(p) >= target
};
std::string to_string(BoundDirection d);
BoundDirection bound_direction_from_string(const std::string& s);

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BisectionStep {
  int iter;
  double lo;
  double hi;
  double trial;
  bool holds;
};

struct BestConstantResult {
  double parameter = 0.0;
  double low = 0.0;
  double high = 0.0;
  BoundDirection direction = BoundDirection::sup_le;
  int iterations = 0;
  /// Witness t at the failing end of the bracket (high for sup_le, low for
  /// inf_ge).
  double violating_t = 0.0;
  std::vector<BisectionStep> trace;
};

/// Bisects on the family parameter until the bracket is narrower than tol.
/// The target inequality must hold at one end of the initial bracket and
/// fail at the other (checked first, BracketError otherwise). Throws
/// std::invalid_argument for a family not flagged as ordered.
BestConstantResult best_constant(const FamilyDescriptor& family, const MeanDescriptor& target,
                                 BoundDirection direction, double lo, double hi, double tol,
                                 const GridSpec& grid, double cmp_tol = kCompareTol);

enum class Verdict { SUPPORTED, REFUTED, INCONCLUSIVE };
std::string to_string(Verdict v);

enum class MemberStatus {
  refuted,       ///< a point with member < candidate exists
  dominates,     ///< member >= candidate at every probed point
  identical,     ///< member equals the candidate on the grid; not a competitor
  inconclusive,  ///< sigma suggests a refutation but no point was found
};
std::string to_string(MemberStatus s);

struct MemberRefutation {
  double param = 0.0;
  MemberStatus status = MemberStatus::inconclusive;
  bool via_sigma = false;
  std::optional<Witness> witness;  ///< member plays m, candidate plays n
  std::optional<double> sigma_member;
  bool sigma_member_converged = false;
};

/// Numerical evidence for a cancelling-mean claim over a sampled parameter
/// ladder. A universally quantified claim cannot be proved this way; the
/// verdict is three-valued and `note` says so.
struct CancellationVerdict {
  std::string candidate;
  std::string family;
  bool left = false;
  bool dominates_some_member = false;
  std::optional<double> dominated_member_param;
  bool dominated_by_none = false;
  std::vector<MemberRefutation> members;
  std::optional<double> sigma_candidate;
  bool sigma_argument_used = false;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::string note;
};

struct CancellationOptions {
  double sigma_margin = 1e-3;
  double tol = kCompareTol;
  /// Half log-ratios beyond the grid, probed when the grid holds no witness.
  std::vector<double> deep_probes = default_deep_probes();

  static std::vector<double> default_deep_probes();  ///< 10^1 .. 10^300
};

/// {0.5, 1, 2, 3, 5, 10, 20, 50} plus the values the family is known for;
/// negated for left verdicts. A finite family uses all its indices.
std::vector<double> default_ladder(const FamilyDescriptor& family, bool left = false);

/// Right cancelling: the candidate dominates some member and no member
/// dominates the candidate. Throws std::invalid_argument for an empty ladder,
/// or for a continuous family whose ladder never reaches |p| >= 10.
CancellationVerdict cancelling_verdict(const FamilyDescriptor& family,
                                       const MeanDescriptor& candidate,
                                       const std::vector<double>& ladder, const GridSpec& grid,
                                       const CancellationOptions& options = {});

/// Left cancelling, evaluated as the right verdict for the dual family and
/// the dual candidate.
CancellationVerdict left_cancelling_verdict(const FamilyDescriptor& family,
                                            const MeanDescriptor& candidate,
                                            const std::vector<double>& ladder,
                                            const GridSpec& grid,
                                            const CancellationOptions& options = {});

/// Both sides of
///   log(I_{s,s}(a,b)/S(a,b)) = (1/s)(l_{-1/s}(a^s,b^s)/L(a^s,b^s) - 1).
struct IdentityResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  ///< lhs - rhs
  double relative = 0.0;  ///< |residual| / (|lhs| + 1e-15)
};

/// Throws std::domain_error for s = 0 or nonpositive arguments.
IdentityResidual stolarsky_lehmer_identity(double a, double b, double s);

/// L_3^3/A^3 at (1 - t, 1 + t), by evaluating the mean and from the
/// closed ratio 2t(3 + t^2)/(6 atanh t).
struct CubicRatio {
  double direct = 0.0;
  double closed = 0.0;
  bool agree = false;  ///< |direct - closed| <= 1e-12
};

/// Throws std::domain_error unless 0 < t < 1.
CubicRatio genlog_cubic_ratio(double t);

/// g(t) = log(1 + t^2) - (1 + t) log(1 + t) - (1 - t) log(1 - t), twice the
/// log of A_2/S at the canonical pair, and its second derivative in closed
/// form and by central differences.
double holder_gini_gap(double t);
double holder_gini_gap_d2(double t);
double holder_gini_gap_d2_numeric(double t, double h = 1e-5);

}  // namespace meanlab
