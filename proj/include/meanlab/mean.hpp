#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meanlab/canonical.hpp"
#include "meanlab/grid.hpp"

namespace meanlab {

/// Elementary means and parametric families, plus the two constructions
/// (duality and the power transform) that build a mean from another one.
enum class MeanKind {
  harmonic,      // H
  geometric,     // G
  logarithmic,   // L
  identric,      // I
  arithmetic,    // A
  gini,          // S = a^{a/(a+b)} b^{b/(a+b)}
  seiffert_p,    // P
  seiffert_t,    // T
  holder,        // A_s
  lehmer,        // l_r
  genlog,        // L_p
  stolarsky,     // I_{r,s}
  lambda,        // lambda_s
  kfamily,       // K_r
  power_transform,  // M_s = M(a^s, b^s)^{1/s}
  dual,          // ab / M(a, b)
  custom,        // caller-supplied evaluator, used for harness tests
};

/// Near-diagonal policy: for |t| below `threshold` a mean with a known
/// expansion is evaluated from log phi(t) = c1 t^2 + c2 t^4. A threshold of
/// zero forces the direct formulas everywhere.
struct Stabilization {
  double threshold = 1e-4;
  int series_order = 2;
};

/// Parameters closer than this to a removable singularity of a family are
/// routed to the limiting branch.
inline constexpr double kBranchProximity = 1e-8;
/// Largest admissible |parameter| for every family.
inline constexpr double kParameterClamp = 64.0;

/// Immutable handle to a concrete mean. Copies share the underlying node.
///
/// Evaluation scales out c = (a + b)/2 first and works on the canonical pair
/// (1 - t, 1 + t); see CanonicalPoint. The diagonal a == b returns a before
/// any formula runs.
class MeanDescriptor {
 public:
  using CustomFn = std::function<double(double, double)>;

  MeanKind kind() const;
  std::span<const double> params() const;
  /// The mean a dual or power transform is built on, otherwise nullptr.
  const MeanDescriptor* base() const;
  const Stabilization& stabilization() const;

  /// Parseable expression, e.g. "pow(holder(2), -1)".
  std::string expr() const;

  /// M(a, b). Throws std::domain_error for nonpositive or non-finite input.
  double operator()(double a, double b) const;
  /// log(M(1 - t, 1 + t)) at a canonical point (the scale is ignored).
  double log_phi(const CanonicalPoint& p) const;

  /// Coefficients (c1, c2) of log phi(t) = c1 t^2 + c2 t^4 + O(t^6), when
  /// the mean has a registered expansion.
  std::optional<std::array<double, 2>> log_phi_series() const;
  /// max(1, largest parameter magnitude), multiplied through power
  /// transforms. log_phi is accurate to a small multiple of
  /// eps * parameter_scale() * (t^2 + |log phi|), and the near-diagonal series
  /// is used below stabilization().threshold / parameter_scale().
  double parameter_scale() const;

  MeanDescriptor with_stabilization(Stabilization s) const;

  // Construction. Parametric families live in families.hpp.
  static MeanDescriptor elementary(MeanKind kind);
  static MeanDescriptor custom(std::string name, CustomFn fn);

  struct Node;
  explicit MeanDescriptor(std::shared_ptr<const Node> node);

 private:
  std::shared_ptr<const Node> node_;
};

struct MeanDescriptor::Node {
  MeanKind kind;
  std::vector<double> params;
  std::optional<MeanDescriptor> base;
  Stabilization stabilization;
  std::string custom_name;
  CustomFn custom_fn;
};

/// Elementary mean by letter: one of H, G, L, I, A, S, P, T.
MeanDescriptor elementary(char letter);

/// The mean ab / m(a, b). dual(dual(m)) returns m itself.
MeanDescriptor dual(const MeanDescriptor& m);

/// phi_m(t) = m(1 - t, 1 + t). Throws std::domain_error unless |t| < 1.
double phi(const MeanDescriptor& m, double t);

/// Convenience wrapper around m(a, b).
double eval(const MeanDescriptor& m, double a, double b);

struct AxisWitness {
  double a;
  double b;
  double value;
};

struct MeanAxiomReport {
  double symmetry_max_violation = 0.0;
  double homogeneity_max_violation = 0.0;
  double betweenness_max_violation = 0.0;
  std::vector<AxisWitness> betweenness_violations;
  std::vector<AxisWitness> symmetry_violations;
  std::vector<AxisWitness> homogeneity_violations;
  bool reflexivity_ok = true;

  bool clean() const {
    return betweenness_violations.empty() && symmetry_violations.empty() &&
           homogeneity_violations.empty() && reflexivity_ok;
  }
};

/// Check betweenness, symmetry, homogeneity and reflexivity on the pairs
/// (1 - t, 1 + t) for each t of the grid, probing homogeneity with the
/// grid's scale factors. Violations are relative and reported when they
/// exceed `tol`; a failing mean yields a populated report, never a throw.
MeanAxiomReport validate_mean(const MeanDescriptor& m, const GridSpec& grid, double tol);

}  // namespace meanlab
