#include "meanlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mean_impl.hpp"

namespace meanlab {

using detail::make_parametric;

MeanDescriptor holder(double s) { return make_parametric(MeanKind::holder, {s}); }

MeanDescriptor lehmer(double r) { return make_parametric(MeanKind::lehmer, {r}); }

MeanDescriptor gen_log(double p) { return make_parametric(MeanKind::genlog, {p}); }

MeanDescriptor stolarsky(double r, double s) {
  return make_parametric(MeanKind::stolarsky, {std::min(r, s), std::max(r, s)});
}

MeanDescriptor lambda_mean(double s) { return make_parametric(MeanKind::lambda, {s}); }

MeanDescriptor k_mean(double r) { return make_parametric(MeanKind::kfamily, {r}); }

MeanDescriptor power_transform(const MeanDescriptor& m, double s) {
  if (m.kind() == MeanKind::geometric) return m;
  if (m.kind() == MeanKind::arithmetic) return holder(s);
  return make_parametric(MeanKind::power_transform, {s}, m);
}

WeightedHolder::WeightedHolder(double p, double r) : p_(p), r_(r) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("weighted_holder: weight must lie in (0, 1), got " +
                            detail::format_param(p));
  }
  if (!std::isfinite(r) || std::fabs(r) > kParameterClamp) {
    throw std::domain_error("weighted_holder: exponent outside the admissible range");
  }
}

double WeightedHolder::operator()(double a, double b) const {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("weighted_holder: arguments must be positive and finite");
  }
  const double q = 1.0 - p_;
  const double la = std::log(a);
  const double lb = std::log(b);
  if (detail::near(r_, 0.0)) return std::exp(p_ * la + q * lb);
  // (p a^r + q b^r)^{1/r} with the larger power factored out.
  const double x = r_ * la + std::log(p_);
  const double y = r_ * lb + std::log(q);
  const double top = std::max(x, y);
  const double lse = top + std::log1p(std::exp(std::min(x, y) - top));
  return std::exp(lse / r_);
}

WeightedHolder weighted_holder(double p, double r) { return WeightedHolder(p, r); }

namespace {

FamilyDescriptor of(FamilyId id) {
  FamilyDescriptor f;
  f.id = id;
  return f;
}

}  // namespace

MeanDescriptor FamilyDescriptor::instance(double param) const {
  MeanDescriptor m = [&]() -> MeanDescriptor {
    switch (id) {
      case FamilyId::holder: return holder(param);
      case FamilyId::lehmer: return lehmer(param);
      case FamilyId::genlog: return gen_log(param);
      case FamilyId::stolarsky: return stolarsky(fixed_param, param);
      case FamilyId::stolarsky_diagonal: return stolarsky(param, param);
      case FamilyId::lambda: return lambda_mean(param);
      case FamilyId::kfamily: return k_mean(param);
      case FamilyId::power_transform: return power_transform(*base, param);
      case FamilyId::finite: {
        const double idx = std::round(param);
        if (idx < 0 || idx >= static_cast<double>(members.size()) || idx != param) {
          throw std::domain_error("finite family index out of range");
        }
        return members[static_cast<std::size_t>(idx)];
      }
    }
    throw std::logic_error("FamilyDescriptor::instance: unhandled family");
  }();
  return dualized ? dual(m) : m;
}

std::string FamilyDescriptor::name() const {
  std::string n;
  switch (id) {
    case FamilyId::holder: n = "holder"; break;
    case FamilyId::lehmer: n = "lehmer"; break;
    case FamilyId::genlog: n = "genlog"; break;
    case FamilyId::stolarsky: n = "stolarsky(" + detail::format_param(fixed_param) + ",*)"; break;
    case FamilyId::stolarsky_diagonal: n = "stolarsky-diagonal"; break;
    case FamilyId::lambda: n = "lambda"; break;
    case FamilyId::kfamily: n = "k"; break;
    case FamilyId::power_transform: n = "pow(" + base->expr() + ",*)"; break;
    case FamilyId::finite: {
      n = "{";
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) n += ",";
        n += members[i].expr();
      }
      n += "}";
      break;
    }
  }
  return dualized ? "dual(" + n + ")" : n;
}

FamilyDescriptor FamilyDescriptor::holder_family() { return of(FamilyId::holder); }
FamilyDescriptor FamilyDescriptor::lehmer_family() { return of(FamilyId::lehmer); }
FamilyDescriptor FamilyDescriptor::genlog_family() { return of(FamilyId::genlog); }

FamilyDescriptor FamilyDescriptor::stolarsky_slice(double r) {
  FamilyDescriptor f = of(FamilyId::stolarsky);
  f.param_arity = 2;
  f.fixed_param = r;
  return f;
}

FamilyDescriptor FamilyDescriptor::stolarsky_diagonal_family() {
  FamilyDescriptor f = of(FamilyId::stolarsky_diagonal);
  f.param_arity = 2;
  return f;
}

FamilyDescriptor FamilyDescriptor::lambda_family() { return of(FamilyId::lambda); }
FamilyDescriptor FamilyDescriptor::k_family() { return of(FamilyId::kfamily); }

FamilyDescriptor FamilyDescriptor::power_family(const MeanDescriptor& base) {
  FamilyDescriptor f = of(FamilyId::power_transform);
  f.base = base;
  return f;
}

FamilyDescriptor FamilyDescriptor::finite_family(std::vector<MeanDescriptor> members) {
  if (members.empty()) throw std::invalid_argument("finite family needs members");
  FamilyDescriptor f = of(FamilyId::finite);
  f.members = std::move(members);
  return f;
}

FamilyDescriptor FamilyDescriptor::elementary_chain() {
  return finite_family({elementary('H'), elementary('G'), elementary('L'), elementary('I'),
                        elementary('A'), elementary('S')});
}

FamilyDescriptor FamilyDescriptor::dualized_family() const {
  FamilyDescriptor f = *this;
  f.dualized = !dualized;
  f.ordered = !f.dualized;
  return f;
}

FamilyDescriptor family_by_name(const std::string& name) {
  if (name == "holder") return FamilyDescriptor::holder_family();
  if (name == "lehmer") return FamilyDescriptor::lehmer_family();
  if (name == "genlog") return FamilyDescriptor::genlog_family();
  if (name == "stolarsky-diagonal" || name == "stolarsky_diagonal")
    return FamilyDescriptor::stolarsky_diagonal_family();
  if (name == "lambda") return FamilyDescriptor::lambda_family();
  if (name == "k") return FamilyDescriptor::k_family();
  if (name == "elementary") return FamilyDescriptor::elementary_chain();
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace meanlab
