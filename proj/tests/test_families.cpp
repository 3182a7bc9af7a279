#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "meanlab/order_lab.hpp"
#include "oracle.hpp"

using namespace meanlab;

namespace {

GridSpec coarse_grid() {
  GridOptions o;
  o.points = 96;
  return make_grid(o);
}

}  // namespace

TEST_CASE("family members at worked values") {
  CHECK(eval(holder(1), 1, 3) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval(holder(0), 4, 9) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(eval(lehmer(0), 1, 3) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval(lehmer(1), 1, 3) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(eval(stolarsky(1, 2), 1, 3) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval(stolarsky(-1, 1), 4, 9) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(eval(lambda_mean(2), 1, 3) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval(k_mean(1), 1, 3) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(eval(k_mean(-1), 1, 3) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval(power_transform(elementary('A'), -1), 1, 3) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(eval(power_transform(elementary('G'), 7), 1, 3) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("families reduce to elementary means where they should") {
  const auto grid = coarse_grid();
  const std::pair<MeanDescriptor, MeanDescriptor> same[] = {
      {lehmer(-0.5), elementary('G')},      {gen_log(1), elementary('L')},
      {k_mean(0), elementary('S')},         {k_mean(-1), elementary('A')},
      {holder(1), elementary('A')},         {holder(-1), elementary('H')},
      {stolarsky(1, 1), elementary('I')},   {stolarsky(0, 1), elementary('L')},
      {lambda_mean(2), elementary('A')},
  };
  for (const auto& [m, n] : same) {
    INFO(m.expr() << " vs " << n.expr());
    const auto r = compare(m, n, grid, 1e-12);
    CHECK(r.verdict == Order::EQUAL);
  }
}

TEST_CASE("power transform matches the oracle and the dual relation") {
  const MeanDescriptor L = elementary('L');
  for (double s : {-3.0, -0.5, 0.5, 3.0}) {
    const auto ms = power_transform(L, s);
    const double exact = oracle::to_double(oracle::eval(ms, 2, 5));
    INFO("s=" << s);
    CHECK(eval(ms, 2, 5) == doctest::Approx(exact).epsilon(1e-14));
  }
  // M_{-s}(a, b) = ab / M_s(a, b) for symmetric homogeneous M.
  for (const auto& m : {L, elementary('S'), elementary('P'), lehmer(2.0)}) {
    const double s = 3;
    const double lhs = eval(power_transform(m, -s), 2, 5);
    const double rhs = 10.0 / eval(power_transform(m, s), 2, 5);
    const double exact = 10.0 / oracle::to_double(oracle::eval(power_transform(m, s), 2, 5));
    INFO(m.expr());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    CHECK(lhs == doctest::Approx(exact).epsilon(1e-14));
  }
}

TEST_CASE("weighted holder") {
  CHECK(weighted_holder(0.5, 2)(1, 3) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(weighted_holder(0.25, 1)(1, 3) == doctest::Approx(2.5).epsilon(1e-15));
  // Weights a/(a+b) at exponent 1 give K_1.
  const double a = 1.7, b = 4.2;
  CHECK(weighted_holder(a / (a + b), 1)(a, b) ==
        doctest::Approx(eval(k_mean(1), a, b)).epsilon(1e-14));
  CHECK(weighted_holder(0.3, 0)(2, 8) ==
        doctest::Approx(std::pow(2.0, 0.3) * std::pow(8.0, 0.7)).epsilon(1e-15));
  CHECK_THROWS_AS(weighted_holder(0.0, 1), std::domain_error);
  CHECK_THROWS_AS(weighted_holder(1.0, 1), std::domain_error);
  CHECK_THROWS_AS(weighted_holder(-0.2, 1), std::domain_error);
}

TEST_CASE("families increase with their parameter") {
  const auto grid = coarse_grid();
  const std::vector<double> ladder{-20, -5, -2, -1, -0.5, 0, 0.5, 1, 2, 5, 20};
  for (const auto& f : {FamilyDescriptor::holder_family(), FamilyDescriptor::lehmer_family(),
                        FamilyDescriptor::genlog_family(),
                        FamilyDescriptor::stolarsky_diagonal_family(),
                        FamilyDescriptor::lambda_family(), FamilyDescriptor::k_family(),
                        FamilyDescriptor::stolarsky_slice(2.0),
                        FamilyDescriptor::power_family(elementary('L'))}) {
    INFO(f.name());
    const auto r = monotone_in_param(f, ladder, grid);
    CHECK(r.passed);
  }
  CHECK(monotone_in_param(FamilyDescriptor::elementary_chain(), {0, 1, 2, 3, 4, 5}, grid).passed);
}

TEST_CASE("stolarsky means increase in each argument") {
  for (auto [r, s] : {std::pair{-3.0, 2.0}, {0.0, 1.0}, {1.0, 1.0}, {2.5, 4.0}, {-4.0, -1.0}}) {
    const auto m = stolarsky(r, s);
    double prev = 0.0;
    for (double x = 0.1; x < 10.0; x *= 1.3) {
      const double v = eval(m, x, 3.0);
      INFO(m.expr() << " x=" << x);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("stolarsky parameter symmetry is exact and duality holds") {
  for (auto [r, s] : {std::pair{-3.0, 2.0}, {0.5, 1.5}, {-1.0, 4.0}, {2.0, 7.0}}) {
    for (double t : {1e-6, 0.01, 0.3, 0.9, 0.999999}) {
      CHECK(phi(stolarsky(r, s), t) == phi(stolarsky(s, r), t));
      // dual(I_{r,s}) = I_{-r,-s}
      const double lhs = phi(dual(stolarsky(r, s)), t);
      const double rhs = phi(stolarsky(-r, -s), t);
      INFO("r=" << r << " s=" << s << " t=" << t);
      CHECK(std::fabs(lhs - rhs) <= 1e-10 * rhs);
    }
  }
}

TEST_CASE("diagonal stolarsky is log-convex for s < 0 and log-concave for s > 0") {
  for (double t : {0.05, 0.3, 0.7, 0.95}) {
    const auto p = CanonicalPoint::from_t(t);
    auto lg = [&](double s) { return stolarsky(s, s).log_phi(p); };
    for (double s = 0.5; s <= 8.0; s *= 2) {
      const double h = s / 2;
      INFO("t=" << t << " s=" << s);
      CHECK(lg(s) >= 0.5 * (lg(s - h) + lg(s + h)) - 1e-10);
      CHECK(lg(-s) <= 0.5 * (lg(-s - h) + lg(-s + h)) + 1e-10);
    }
  }
}

TEST_CASE("sandwich chains") {
  const auto grid = coarse_grid();
  // H <= lambda_s <= S for s in [-2, 5], with the ends attained.
  for (double s : {-2.0, -1.0, -0.5, 0.0, 1.0, 2.0, 3.5, 5.0}) {
    INFO("lambda " << s);
    CHECK(verify_chain({elementary('H'), lambda_mean(s), elementary('S')}, grid).passed);
  }
  // lambda_{-4} < H < lambda_{-3}, lambda_{-1} < G < lambda_{-1/2},
  // lambda_0 < L < lambda_1 < I < lambda_2 = A, lambda_5 < S
  const std::vector<std::vector<MeanDescriptor>> lambda_chains{
      {lambda_mean(-4), elementary('H'), lambda_mean(-3)},
      {lambda_mean(-1), elementary('G'), lambda_mean(-0.5)},
      {lambda_mean(0), elementary('L'), lambda_mean(1), elementary('I'), lambda_mean(2)},
      {lambda_mean(5), elementary('S')}};
  for (const auto& chain : lambda_chains) {
    const auto r = verify_chain(chain, grid);
    for (const auto& link : r.links) CHECK(link.verdict == Order::LE);
  }
  // A_{-2} <= A_r <= A_2 for r in [-2, 2]
  for (double r : {-1.5, -0.5, 0.0, 0.5, 1.5}) {
    INFO("holder " << r);
    CHECK(verify_chain({holder(-2), holder(r), holder(2)}, grid).passed);
  }
  // dual(S) <= I_{-3,-3} <= I_{r,s} <= I_{3,3} <= S for r, s in [-3, 3]
  for (auto [r, s] : {std::pair{-2.0, 1.0}, {0.0, 0.0}, {-3.0, 3.0}, {1.0, 2.5}}) {
    INFO("stolarsky " << r << "," << s);
    CHECK(verify_chain({dual(elementary('S')), stolarsky(-3, -3), stolarsky(r, s),
                        stolarsky(3, 3), elementary('S')},
                       grid)
              .passed);
  }
}

TEST_CASE("parameters outside the clamp or not finite are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_NOTHROW(holder(kParameterClamp));
  CHECK_THROWS_AS(holder(64.5), std::domain_error);
  CHECK_THROWS_AS(lehmer(-65), std::domain_error);
  CHECK_THROWS_AS(gen_log(nan), std::domain_error);
  CHECK_THROWS_AS(stolarsky(0, 70), std::domain_error);
  CHECK_THROWS_AS(lambda_mean(std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS(k_mean(100), std::domain_error);
  CHECK_THROWS_AS(power_transform(elementary('L'), nan), std::domain_error);
}

TEST_CASE("family instances are valid means") {
  const auto grid = coarse_grid();
  for (double p : {-7.0, -1.0, -0.25, 0.0, 0.75, 3.0, 9.0}) {
    for (const auto& m : {holder(p), lehmer(p), gen_log(p), stolarsky(p, 1.0), lambda_mean(p),
                          k_mean(p), power_transform(elementary('I'), p)}) {
      INFO(m.expr());
      CHECK(validate_mean(m, grid, 1e-11).clean());
    }
  }
}

TEST_CASE("family lookup and naming") {
  CHECK(family_by_name("holder").id == FamilyId::holder);
  CHECK(family_by_name("stolarsky-diagonal").id == FamilyId::stolarsky_diagonal);
  CHECK_THROWS_AS(family_by_name("nope"), std::invalid_argument);
  const auto d = FamilyDescriptor::holder_family().dualized_family();
  CHECK_FALSE(d.ordered);
  CHECK(d.name() == "dual(holder)");
  CHECK(d.dualized_family().ordered);
  CHECK_THROWS_AS(FamilyDescriptor::elementary_chain().instance(6), std::domain_error);
  CHECK(FamilyDescriptor::elementary_chain().instance(2).expr() == "L");
}
