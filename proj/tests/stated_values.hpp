#pragma once
// Example values as they are written down in the project's reference
// material, each paired with its exact definition evaluated by the oracle.
// A decimal value agrees when it is within half a unit of its last stated
// digit; a fraction agrees when it equals the exact value to 1e-25.

#include <boost/math/constants/constants.hpp>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace oracle {

struct StatedValue {
  std::string name;
  std::string stated;
  std::function<Real()> exact;
};

inline Real parse_stated(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Real(s);
  return Real(s.substr(0, slash)) / Real(s.substr(slash + 1));
}

inline Real stated_tolerance(const std::string& s) {
  if (s.find('/') != std::string::npos) return Real("1e-25");
  const auto dot = s.find('.');
  const int digits = dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
  return pow(Real(10), -digits) / 2;
}

/// Signed distance from the exact value to the stated one, in units of the
/// last stated digit (0 for fractions that agree).
inline double units_off(const StatedValue& v) {
  const Real exact = v.exact();
  const Real stated = parse_stated(v.stated);
  return to_double((stated - exact) / (2 * stated_tolerance(v.stated)));
}

inline bool agrees(const StatedValue& v) {
  return abs(v.exact() - parse_stated(v.stated)) <= stated_tolerance(v.stated);
}

/// phi(t) = 1 + a1 t^2 + a2 t^4 + ..., from the naive formula at tiny t.
inline Real phi_coefficient(const std::function<Real(const Real&, const Real&)>& m, int k) {
  const Real h("1e-15");
  auto f = [&](const Real& t) { return (m(1 - t, 1 + t) - 1) / (t * t); };
  if (k == 1) {
    // f(t) = a1 + a2 t^2 + O(t^4); Richardson removes the t^2 term.
    return (4 * f(h) - f(2 * h)) / 3;
  }
  return (f(2 * h) - f(h)) / (3 * h * h);
}

inline std::vector<StatedValue> stated_values() {
  using boost::math::constants::pi;
  const Real one = 1;
  const Real three = 3;
  auto at13 = [=](auto fn) { return [=] { return fn(one, three); }; };
  auto iss = [](double s) {
    return [=](const Real& a, const Real& b) { return stolarsky(Real(s), Real(s), a, b); };
  };
  return {
      {"S(1,3)", "2.2795071", at13(S)},
      {"L(1,3)", "1.8204785", at13(L)},
      {"P(1,3)", "1.9098593", at13(P)},
      {"dual(S)(1,3)", "1.3160740", [=] { return one * three / S(one, three); }},
      {"phi_S(0.5)", "1.1398806", [] { return S(Real("0.5"), Real("1.5")); }},
      {"holder(2)(1,3)", "2.2360680", [=] { return holder(2, one, three); }},
      {"holder(1/3)(1,3)", "1.8208984", [=] { return holder(one / 3, one, three); }},
      {"lehmer(-1/3)(1,3)", "1.8189254", [=] { return lehmer(-one / 3, one, three); }},
      {"lehmer(1)(1,3)", "2.5", [=] { return lehmer(one, one, three); }},
      {"genlog(3)(1,3)", "1.9906800", [=] { return genlog(3, one, three); }},
      {"genlog(-3)(1,3)", "1.5070231", [=] { return genlog(-3, one, three); }},
      {"stolarsky(1,1)(1,3)", "1.9115577", [=] { return stolarsky(1, 1, one, three); }},
      {"stolarsky(3,3)(1,3)", "2.2423697", [=] { return stolarsky(3, 3, one, three); }},
      {"lambda(1)(1,3)", "1.9111381", [=] { return lambda(1, one, three); }},
      {"lambda(0)(1,3)", "1.8188446", [=] { return lambda(0, one, three); }},
      {"k(1)(1,3)", "2.5", [=] { return kmean(1, one, three); }},
      {"k(-1)(1,3)", "2", [=] { return kmean(-1, one, three); }},
      {"weighted holder(1/4, 1)(1,3)", "2.5", [=] { return (one * one + 3 * three) / 4; }},
      {"pow(A,2)(1,3)", "2.2360680",
       [=] { return sqrt(A(one * one, three * three)); }},
      {"sigma(pow(A,2))", "1.4142136", [] { return sqrt(Real(2)); }},
      {"sigma(stolarsky(3,3))", "1.4330626", [] { return 2 * exp(-Real(1) / 3); }},
      {"sigma(k(1))", "2", [] { return kmean(1, Real("1e-60"), Real(2)); }},
      {"ln 2 / ln pi", "0.6055", [] { return log(Real(2)) / log(pi<Real>()); }},
      {"log(stolarsky(3,3)/S) at (1,3)", "-0.016428",
       [=] { return log(stolarsky(3, 3, one, three) / S(one, three)); }},
      {"(lehmer(-1/3)/L - 1)/3 at (1,27)", "-0.016428",
       [=] {
         const Real b = 27;
         return (lehmer(-one / 3, one, b) / L(one, b) - 1) / 3;
       }},
      {"L(1,27)", "7.8887543", [=] { return L(one, Real(27)); }},
      {"cubic ratio at t = 0.5", "0.9861",
       [] {
         const Real t("0.5");
         return pow(genlog(3, 1 - t, 1 + t), 3);
       }},
      {"a1(G)", "-1/2", [] { return phi_coefficient(G, 1); }},
      {"a2(G)", "-1/8", [] { return phi_coefficient(G, 2); }},
      {"a1(L)", "-1/3", [] { return phi_coefficient(L, 1); }},
      {"a1(I)", "-1/6", [] { return phi_coefficient(I, 1); }},
      {"a1(S)", "1/2", [] { return phi_coefficient(S, 1); }},
      {"a1(stolarsky(1,2))", "0/1",
       [] {
         return phi_coefficient(
             [](const Real& a, const Real& b) { return stolarsky(1, 2, a, b); }, 1);
       }},
      {"a1(stolarsky(0,1))", "-1/3",
       [] {
         return phi_coefficient(
             [](const Real& a, const Real& b) { return stolarsky(0, 1, a, b); }, 1);
       }},
      {"a1(stolarsky(1,1))", "-1/6", [=] { return phi_coefficient(iss(1), 1); }},
      {"a1(stolarsky(-2,-1))", "-1/1",
       [] {
         return phi_coefficient(
             [](const Real& a, const Real& b) { return stolarsky(-2, -1, a, b); }, 1);
       }},
  };
}

/// Names of the entries that disagree with the oracle, as established by an
/// independent 40-digit evaluation.
inline std::vector<std::string> known_disagreements() {
  return {"phi_S(0.5)",
          "holder(1/3)(1,3)",
          "lehmer(-1/3)(1,3)",
          "genlog(3)(1,3)",
          "genlog(-3)(1,3)",
          "stolarsky(1,1)(1,3)",
          "stolarsky(3,3)(1,3)",
          "lambda(1)(1,3)",
          "lambda(0)(1,3)",
          "log(stolarsky(3,3)/S) at (1,3)",
          "(lehmer(-1/3)/L - 1)/3 at (1,27)",
          "L(1,27)"};
}

}  // namespace oracle
