// SPDX-License-Identifier: MIT
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "subdiff/mittag_leffler.hpp"

using subdiff::exact_solution;
using subdiff::ml_asymptotic;
using subdiff::ml_neg;
using subdiff::ml_overlap_discrepancy;
using subdiff::ml_series;
using subdiff::ml_switch_point;
using subdiff::SeriesSolution;

TEST_SUITE("mittag_leffler") {

TEST_CASE("erfcx reference oracle against published values") {
  // Spot values to 17 significant digits (arbitrary-precision source),
  // covering both the direct product and the continued-fraction branch.
  struct Ref { double x, v; };
  const Ref refs[] = {
      {0.25, 0.77034654773099674},  {1.0, 0.427583576155807},
      {2.5, 0.21080636406114358},   {5.0, 0.11070463773306863},
      {5.5, 0.10096221839949909},   {8.0, 0.069985166200880928},
      {12.0, 0.046854221014893763}, {20.0, 0.028174348741051319},
      {35.0, 0.016113130956815979}, {50.0, 0.011281536265323773}};
  for (const auto& r : refs)
    CHECK(oracle::erfcx(r.x) == doctest::Approx(r.v).epsilon(2e-15));
}

TEST_CASE("boundary values") {
  CHECK(ml_neg(0.3, 0.0) == 1.0);
  CHECK(ml_neg(1.0, 0.0) == 1.0);
  CHECK(ml_neg(1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(ml_neg(0.5, 1.0) ==
        doctest::Approx(0.4275835761558070).epsilon(1e-13));
  CHECK(ml_switch_point(0.5) == doctest::Approx(std::sqrt(33.0)));
}

TEST_CASE("alpha = 1 reduces to the exponential on [0, 50]") {
  for (double x = 0.0; x <= 50.0; x += 0.37)
    CHECK(std::fabs(ml_neg(1.0, x) - std::exp(-x)) <= 1e-11);
  // The power-series branch on its own, up to its handover point.
  for (double x : {0.5, 3.0, 8.0, 20.0, 33.0})
    CHECK(std::fabs(ml_series(1.0, x) - std::exp(-x)) <= 1e-13);
}

TEST_CASE("alpha = 1/2 satisfies the erfcx identity on [0, 50]") {
  // E_{1/2}(-x) = exp(x^2) erfc(x).
  for (double x = 0.0; x <= 50.0; x += 0.25)
    CHECK(std::fabs(ml_neg(0.5, x) - oracle::erfcx(x)) <= 1e-11);
}

TEST_CASE("series and asymptotic branches agree across the handover band") {
  for (double alpha :
       {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    const double disc = ml_overlap_discrepancy(alpha, 64);
    CAPTURE(alpha);
    CHECK(disc <= 1e-10);
  }
}

TEST_CASE("complete monotonicity: positive, bounded by 1, decreasing") {
  for (double alpha : {0.1, 0.35, 0.6, 0.85, 1.0}) {
    double prev = 1.0;
    // For alpha < 1 the tail decays only algebraically, ~x^(-1); at
    // alpha = 1 it is exp(-x), which underflows past x ~ 745, so stop
    // the exponential case short of that.
    const double xmax = alpha == 1.0 ? 600.0 : 1e6;
    for (double x = 1e-3; x <= xmax; x *= 1.5) {
      const double v = ml_neg(alpha, x);
      CAPTURE(alpha);
      CAPTURE(x);
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("convexity along the axis") {
  for (double alpha : {0.2, 0.5, 0.8}) {
    for (double x : {0.5, 2.0, 10.0, 40.0}) {
      const double d = 0.125 * x;
      const double bend = ml_neg(alpha, x - d) + ml_neg(alpha, x + d) -
                          2.0 * ml_neg(alpha, x);
      CHECK(bend >= -1e-12);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(ml_neg(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ml_neg(-0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(ml_neg(1.2, 1.0), std::domain_error);
  CHECK_THROWS_AS(ml_neg(0.5, -1.0), std::domain_error);
  CHECK_THROWS_AS(ml_neg(0.5, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(ml_asymptotic(0.5, 0.0), std::domain_error);
}

TEST_CASE("series solution at t = 0 recovers x(1 - x)") {
  const SeriesSolution sol;  // 60 terms
  // Truncation residue is below 8 / lambda_60^3 ~ 1.5e-7.
  CHECK(std::fabs(exact_solution(sol, 0.5, 0.0) - 0.25) <= 2e-6);
  CHECK(std::fabs(exact_solution(sol, 0.25, 0.0) - 0.1875) <= 2e-6);
  CHECK(exact_solution(sol, 0.0, 2.0) == 0.0);
  for (int m = 0; m < 5; ++m) {
    CHECK(sol.lambda(m) == doctest::Approx((2 * m + 1) * M_PI));
    CHECK(sol.mode_factor(m, 0.0) == 1.0);
  }
}

TEST_CASE("series solution at alpha = 1 matches the heat-kernel series") {
  SeriesSolution sol;
  sol.alpha = 1.0;
  sol.kappa = 2.0;
  sol.react = 3.0;
  for (double t : {0.03, 0.4, 1.0}) {
    for (double x : {0.1, 0.3, 0.65}) {
      double ref = 0.0;
      for (int m = 0; m < sol.n_terms; ++m) {
        const double lam = (2 * m + 1) * M_PI;
        ref += 8.0 / (lam * lam * lam) * std::sin(lam * x) *
               std::exp(-(sol.kappa * lam * lam + sol.react) * t);
      }
      CHECK(std::fabs(exact_solution(sol, x, t) - ref) <= 1e-12);
    }
  }
}

TEST_CASE("series solution domain checks") {
  const SeriesSolution sol;
  CHECK_THROWS_AS(exact_solution(sol, -0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(exact_solution(sol, 1.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(exact_solution(sol, 0.5, -1.0), std::domain_error);
}

}  // TEST_SUITE
