#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meanlab/mean.hpp"

namespace meanlab {

// Parametric means. Every factory throws std::domain_error when a parameter
// is not finite or exceeds kParameterClamp in magnitude. Parameters within
// kBranchProximity of a removable singularity evaluate on the limit branch.

/// Hoelder (power) mean ((a^s + b^s)/2)^{1/s}; s = 0 is G.
MeanDescriptor holder(double s);
/// Lehmer mean (a^{r+1} + b^{r+1})/(a^r + b^r).
MeanDescriptor lehmer(double r);
/// Generalized logarithmic mean ((a^p - b^p)/(p log(a/b)))^{1/p};
/// p = 0 is G and p = 1 is L.
MeanDescriptor gen_log(double p);
/// Stolarsky mean I_{r,s}. The parameters are stored sorted, so
/// stolarsky(r, s) and stolarsky(s, r) are the same descriptor.
MeanDescriptor stolarsky(double r, double s);
/// lambda_s = (s-1)/(s+1) (A_{s+1}^{s+1} - A^{s+1})/(A_s^s - A^s) with its
/// limit branches at s = -1, 0, 1.
MeanDescriptor lambda_mean(double s);
/// K_r = ((a^{r+1} + b^{r+1})/(a + b))^{1/r}; r = 0 is S and r = -1 is A.
MeanDescriptor k_mean(double r);
/// M_s = M(a^s, b^s)^{1/s}, s = 0 is G. G is returned unchanged and A maps
/// to holder(s); every other base is composed lazily.
MeanDescriptor power_transform(const MeanDescriptor& m, double s);

/// Weighted power mean (p a^r + (1 - p) b^r)^{1/r}, r = 0 the weighted
/// geometric mean. Not symmetric, so deliberately not a MeanDescriptor.
class WeightedHolder {
 public:
  /// Throws std::domain_error unless 0 < p < 1.
  WeightedHolder(double p, double r);
  double operator()(double a, double b) const;
  double weight() const { return p_; }
  double exponent() const { return r_; }

 private:
  double p_;
  double r_;
};

WeightedHolder weighted_holder(double p, double r);

enum class FamilyId {
  holder,
  lehmer,
  genlog,
  stolarsky,           ///< s -> I_{r,s} with r held fixed
  stolarsky_diagonal,  ///< s -> I_{s,s}
  lambda,
  kfamily,
  power_transform,     ///< s -> M_s for a fixed base M
  finite,              ///< an explicit ordered list, indexed 0..n-1
};

/// A one-parameter ordered family of means, instantiated on demand.
struct FamilyDescriptor {
  FamilyId id = FamilyId::holder;
  int param_arity = 1;
  std::optional<MeanDescriptor> base;  ///< power_transform only
  bool ordered = true;                 ///< instance(p) <= instance(q) for p < q
  double fixed_param = 0.0;            ///< r for the stolarsky slice
  bool dualized = false;               ///< members are dual(instance)
  std::vector<MeanDescriptor> members;  ///< finite only

  MeanDescriptor instance(double param) const;
  std::string name() const;

  static FamilyDescriptor holder_family();
  static FamilyDescriptor lehmer_family();
  static FamilyDescriptor genlog_family();
  static FamilyDescriptor stolarsky_slice(double r);
  static FamilyDescriptor stolarsky_diagonal_family();
  static FamilyDescriptor lambda_family();
  static FamilyDescriptor k_family();
  static FamilyDescriptor power_family(const MeanDescriptor& base);
  static FamilyDescriptor finite_family(std::vector<MeanDescriptor> members);
  /// H <= G <= L <= I <= A <= S as a finite family.
  static FamilyDescriptor elementary_chain();

  /// The family of duals; the order reverses, so `ordered` is cleared.
  FamilyDescriptor dualized_family() const;
};

/// Family by name: holder, lehmer, genlog, stolarsky-diagonal, lambda, k,
/// elementary. Throws std::invalid_argument for anything else.
FamilyDescriptor family_by_name(const std::string& name);

}  // namespace meanlab
