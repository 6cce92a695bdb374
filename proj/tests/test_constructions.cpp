#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "capaflat/constructions.hpp"
#include "capaflat/potential.hpp"
#include "capaflat/radial.hpp"
#include "capaflat/variation.hpp"

using namespace capaflat;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("conformal blow-up scales capacity exactly by c") {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  for (double c : {0.25, 3.0, 10.0}) {
    const ConformalBlowupResult res = conformal_blowup(g, c);
    CHECK(res.ratio == doctest::Approx(c).epsilon(1e-10));
    CHECK(res.deformed.family() == MetricFamily::GeneralRadial);
    // u_c = 1 on the boundary: the boundary metric is unchanged.
    CHECK(res.deformed.a(1.0) == doctest::Approx(g.a(1.0)).epsilon(1e-12));
    CHECK(res.deformed.b(1.0) == doctest::Approx(g.b(1.0)).epsilon(1e-12));
  }
  // c = 1 is the identity deformation.
  const ConformalBlowupResult id = conformal_blowup(g, 1.0);
  CHECK(id.cap_after == doctest::Approx(id.cap_before).epsilon(1e-12));

  CHECK_THROWS_AS(conformal_blowup(g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(conformal_blowup(g, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(conformal_blowup(RadialMetric::flat(1.0, 3.0), 2.0),
                  std::invalid_argument);
}

TEST_CASE("strict-H deformation raises H and capacity together") {
  // Flat r0 = 1: H = 2, cap = 1, dphi/dnu = 1 at the boundary, so
  // H_after = 2 + 4 (c - 1).
  const RadialMetric g = RadialMetric::flat(1.0);
  const StrictHDeformationResult res = strict_H_deformation(g, 1.1);
  CHECK(res.boundary_H_before == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(res.boundary_H_after == doctest::Approx(2.4).epsilon(1e-11));
  CHECK(res.cap_before == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.cap_after == doctest::Approx(1.1).epsilon(1e-10));
  CHECK(res.cap_after > res.cap_before);
  CHECK(res.boundary_H_after > res.boundary_H_before);

  for (double c : {1.01, 1.1}) {
    const StrictHDeformationResult r2 =
        strict_H_deformation(RadialMetric::schwarzschild({2.0, 1.0}), c);
    CHECK(r2.cap_after - r2.cap_before > 0.0);
    CHECK(r2.boundary_H_after >= r2.boundary_H_before);
  }

  CHECK_THROWS_AS(strict_H_deformation(g, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(strict_H_deformation(g, 0.9), std::invalid_argument);
}

TEST_CASE("nonnegative bump strictly increases capacity") {
  const RadialMetric g = RadialMetric::schwarzschild({1.0, 1.0});
  const RadialFunction rho = smooth_bump(1.5, 3.5, 0.05);
  for (double t : {0.01, 0.05}) {
    const BumpDeformationResult res =
        zsc_bump_deformation(g, rho, 1.5, 3.5, t);
    CHECK(res.cap_after > res.cap_before);
    // First-order prediction t * first_order matches to second order.
    const double actual = res.cap_after - res.cap_before;
    CHECK(actual == doctest::Approx(t * res.first_order).epsilon(0.25));
  }

  // Tiny t: the first-order formula becomes very accurate.
  const BumpDeformationResult small =
      zsc_bump_deformation(g, rho, 1.5, 3.5, 1e-4);
  CHECK((small.cap_after - small.cap_before) / 1e-4 ==
        doctest::Approx(small.first_order).epsilon(1e-3));

  CHECK_THROWS_AS(zsc_bump_deformation(g, rho, 1.5, 3.5, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(zsc_bump_deformation(g, rho, 1.5, 3.5, -0.1),
                  std::invalid_argument);
  const RadialFunction dent = smooth_bump(1.5, 3.5, -0.05);
  CHECK_THROWS_AS(zsc_bump_deformation(g, dent, 1.5, 3.5, 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      zsc_bump_deformation(g, smooth_bump(0.5, 3.0, 0.05), 0.5, 3.0, 0.01),
      std::invalid_argument);
}

TEST_CASE("collar capacity bound closed form and decay") {
  CHECK(collar_capacity_bound({100.0, 0.1, 4.0 * kPi}) ==
        doctest::Approx(121.0 / 6000.0).epsilon(1e-14));
  // Slope -1 in log A.
  const double b10 = collar_capacity_bound({10.0, 0.1, 4.0 * kPi});
  const double b1e4 = collar_capacity_bound({1e4, 0.1, 4.0 * kPi});
  CHECK(std::log(b10 / b1e4) / std::log(1e3) ==
        doctest::Approx(1.0).epsilon(1e-13));
  // Linear in eps and in area.
  const double base = collar_capacity_bound({50.0, 0.0, 4.0 * kPi});
  const double bumped = collar_capacity_bound({50.0, 0.24, 4.0 * kPi});
  CHECK(bumped - base ==
        doctest::Approx(4.0 / 50.0 * 0.01).epsilon(1e-12));

  CHECK_THROWS_AS(collar_capacity_bound({0.0, 0.1, 4.0 * kPi}),
                  std::invalid_argument);
  CHECK_THROWS_AS(collar_capacity_bound({10.0, -0.1, 4.0 * kPi}),
                  std::invalid_argument);
  CHECK_THROWS_AS(collar_capacity_bound({10.0, 0.1, 0.0}),
                  std::invalid_argument);
}
