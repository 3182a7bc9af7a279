#pragma once
// Extended-precision reference evaluator. Every mean is computed from its
// textbook formula in (a, b) at 100 decimal digits, with no rescaling and no
// series; at that precision the cancellation near the diagonal still leaves
// more than 60 correct digits on the grids used here.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>

#include "meanlab/mean.hpp"

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_100;

inline Real H(const Real& a, const Real& b) { return 2 * a * b / (a + b); }
inline Real G(const Real& a, const Real& b) { return sqrt(a * b); }
inline Real L(const Real& a, const Real& b) { return (b - a) / (log(b) - log(a)); }
inline Real I(const Real& a, const Real& b) {
  return exp((b * log(b) - a * log(a)) / (b - a) - 1);
}
inline Real A(const Real& a, const Real& b) { return (a + b) / 2; }
inline Real S(const Real& a, const Real& b) { return exp((a * log(a) + b * log(b)) / (a + b)); }
inline Real P(const Real& a, const Real& b) { return (a - b) / (2 * asin((a - b) / (a + b))); }
inline Real T(const Real& a, const Real& b) { return (a - b) / (2 * atan((a - b) / (a + b))); }

inline Real holder(const Real& s, const Real& a, const Real& b) {
  if (s == 0) return G(a, b);
  return pow((pow(a, s) + pow(b, s)) / 2, 1 / s);
}

inline Real lehmer(const Real& r, const Real& a, const Real& b) {
  return (pow(a, r + 1) + pow(b, r + 1)) / (pow(a, r) + pow(b, r));
}

inline Real genlog(const Real& p, const Real& a, const Real& b) {
  if (p == 0) return G(a, b);
  return pow((pow(b, p) - pow(a, p)) / (p * (log(b) - log(a))), 1 / p);
}

inline Real stolarsky(const Real& r, const Real& s, const Real& a, const Real& b) {
  if (r == 0 && s == 0) return G(a, b);
  if (r == s) {
    return exp(-1 / s + (pow(a, s) * log(a) - pow(b, s) * log(b)) / (pow(a, s) - pow(b, s)));
  }
  if (r == 0) return genlog(s, a, b);
  if (s == 0) return genlog(r, a, b);
  return pow(r * (pow(b, s) - pow(a, s)) / (s * (pow(b, r) - pow(a, r))), 1 / (s - r));
}

inline Real lambda(const Real& s, const Real& a, const Real& b) {
  const Real m = A(a, b);
  const Real gini = a * log(a) + b * log(b) - (a + b) * log(m);
  const Real geo = 2 * log(m) - log(a) - log(b);
  if (s == -1) return geo / (1 / (2 * a) + 1 / (2 * b) - 2 / (a + b));
  if (s == 0) return gini / geo;
  if (s == 1) return (b - a) * (b - a) / (4 * gini);
  return (s - 1) / (s + 1) * (pow(a, s + 1) + pow(b, s + 1) - 2 * pow(m, s + 1)) /
         (pow(a, s) + pow(b, s) - 2 * pow(m, s));
}

inline Real kmean(const Real& r, const Real& a, const Real& b) {
  if (r == 0) return S(a, b);
  if (r == -1) return A(a, b);
  return pow((pow(a, r + 1) + pow(b, r + 1)) / (a + b), 1 / r);
}

/// Value of a library descriptor, recomputed from its kind and parameters.
inline Real eval(const meanlab::MeanDescriptor& m, const Real& a, const Real& b) {
  using meanlab::MeanKind;
  if (a == b) return a;
  const auto par = m.params();
  auto p = [&](std::size_t i) { return Real(par[i]); };
  switch (m.kind()) {
    case MeanKind::harmonic: return H(a, b);
    case MeanKind::geometric: return G(a, b);
    case MeanKind::logarithmic: return L(a, b);
    case MeanKind::identric: return I(a, b);
    case MeanKind::arithmetic: return A(a, b);
    case MeanKind::gini: return S(a, b);
    case MeanKind::seiffert_p: return P(a, b);
    case MeanKind::seiffert_t: return T(a, b);
    case MeanKind::holder: return holder(p(0), a, b);
    case MeanKind::lehmer: return lehmer(p(0), a, b);
    case MeanKind::genlog: return genlog(p(0), a, b);
    case MeanKind::stolarsky: return stolarsky(p(0), p(1), a, b);
    case MeanKind::lambda: return lambda(p(0), a, b);
    case MeanKind::kfamily: return kmean(p(0), a, b);
    case MeanKind::power_transform: {
      const Real s = p(0);
      if (s == 0) return G(a, b);
      return pow(eval(*m.base(), pow(a, s), pow(b, s)), 1 / s);
    }
    case MeanKind::dual: return a * b / eval(*m.base(), a, b);
    case MeanKind::custom: break;
  }
  throw std::invalid_argument("oracle: no reference formula for " + m.expr());
}

/// phi at the exact canonical pair (1 - t, 1 + t), t taken as given.
inline Real phi(const meanlab::MeanDescriptor& m, double t) {
  const Real tt = t;
  return eval(m, 1 - tt, 1 + tt);
}

inline double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace oracle
