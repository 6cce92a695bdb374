#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "capaflat/curvature.hpp"
#include "capaflat/radial.hpp"

using namespace capaflat;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("flat metric coefficients and boundary quantities") {
  const RadialMetric g = RadialMetric::flat(1.0);
  CHECK(g.family() == MetricFamily::WarpedProduct);
  CHECK(g.inner_radius() == 1.0);
  CHECK(g.asymptotically_flat());
  CHECK(g.a(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.b(2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sphere_area(g, 2.0) == doctest::Approx(16.0 * kPi).epsilon(1e-15));
  // H = 2 b' / (a b) = 2/r.
  CHECK(mean_curvature_sphere(g, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("schwarzschild coefficients match the isotropic closed forms") {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  CHECK(g.family() == MetricFamily::ConformallyFlat);
  // w(1) = 2, a = w^2 = 4, b = r w^2 = 4.
  CHECK(g.a(1.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(g.b(1.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(sphere_area(g, 1.0) == doctest::Approx(64.0 * kPi).epsilon(1e-14));
  // The boundary r0 = m/2 is a horizon.
  CHECK(std::abs(mean_curvature_sphere(g, 1.0)) < 1e-14);
  // At r = 3: H = 3/16.
  CHECK(mean_curvature_sphere(g, 3.0) ==
        doctest::Approx(3.0 / 16.0).epsilon(1e-14));

  const SchwarzschildParams& p = g.schwarzschild_params();
  CHECK(p.m == 2.0);
  CHECK(p.r0 == 1.0);
  CHECK_THROWS_AS((void)RadialMetric::flat(1.0).schwarzschild_params(),
                  std::logic_error);
}

TEST_CASE("analytic coefficient derivatives agree with divided differences") {
  const RadialMetric g = RadialMetric::schwarzschild({1.5, 1.0});
  const RadialFunction a_fd =
      finite_difference_fallback([&](double r) { return g.a(r); });
  const RadialFunction b_fd =
      finite_difference_fallback([&](double r) { return g.b(r); });
  for (double r : {1.0, 1.7, 3.2, 9.0}) {
    CHECK(g.da(r) == doctest::Approx(a_fd.deriv(r)).epsilon(1e-7));
    CHECK(g.db(r) == doctest::Approx(b_fd.deriv(r)).epsilon(1e-7));
    CHECK(g.d2a(r) == doctest::Approx(a_fd.second(r)).epsilon(2e-3));
    CHECK(g.d2b(r) == doctest::Approx(b_fd.second(r)).epsilon(2e-3));
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(RadialMetric::flat(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialMetric::flat(2.0, 1.0), std::invalid_argument);
  // Boundary inside the horizon (m > 0 requires r0 >= m/2).
  CHECK_THROWS_AS(RadialMetric::schwarzschild({2.0, 0.5}),
                  std::invalid_argument);
  // Conformal factor must stay positive (m < 0 requires r0 > -m/2).
  CHECK_THROWS_AS(RadialMetric::schwarzschild({-2.0, 1.0}),
                  std::invalid_argument);
  CHECK_NOTHROW(RadialMetric::schwarzschild({-1.9, 1.0}));
  CHECK_THROWS_AS(RadialMetric::sphere_band(-1.6, 1.0),
                  std::invalid_argument);
  CHECK_NOTHROW(RadialMetric::sphere_band(-1.3, 1.3));
  // Conformally flat charts need r0 > 0.
  CHECK_THROWS_AS(
      RadialMetric::conformally_flat(constant_function(1.0), -1.0),
      std::invalid_argument);
}

TEST_CASE("ricci tensor of the conformal family: schwarzschild values") {
  // w = 1 + 1/r (m = 2); at r = 2: Ric_rr = -2/9, Ric_ang = 4/9 and the
  // scalar curvature vanishes.
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const CurvatureResult c = curvature(g, 2.0);
  CHECK(c.ric.rr == doctest::Approx(-2.0 / 9.0).epsilon(1e-13));
  CHECK(c.ric.ang == doctest::Approx(4.0 / 9.0).epsilon(1e-13));
  CHECK(std::abs(c.scalar) < 1e-13);
  for (double r : {1.0, 1.4, 5.0, 40.0}) {
    CHECK(std::abs(scalar_curvature(g, r)) < 1e-12);
  }
}

TEST_CASE("ricci tensor of the warped family: sphere band has R = 6") {
  const RadialMetric g = RadialMetric::sphere_band(-1.3, 1.3);
  for (double r : {-1.2, 0.0, 0.3, 1.1}) {
    const CurvatureResult c = curvature(g, r);
    const double cr = std::cos(r);
    CHECK(c.ric.rr == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.ric.ang == doctest::Approx(2.0 * cr * cr).epsilon(1e-12));
    CHECK(c.scalar == doctest::Approx(6.0).epsilon(1e-12));
  }
}

TEST_CASE("flat space is ricci flat in both families") {
  const RadialMetric warped = RadialMetric::flat(1.0);
  const RadialMetric conformal =
      RadialMetric::conformally_flat(constant_function(1.0), 1.0);
  for (double r : {1.0, 2.5, 10.0}) {
    CHECK(std::abs(curvature(warped, r).ric.rr) < 1e-14);
    CHECK(std::abs(curvature(warped, r).ric.ang) < 1e-14);
    CHECK(std::abs(curvature(conformal, r).scalar) < 1e-14);
  }
}

TEST_CASE("curvature rejects the unstructured family") {
  const RadialMetric g = RadialMetric::general_radial(
      constant_function(1.0), coordinate_function(), 1.0);
  CHECK_THROWS_AS(curvature(g, 2.0), std::invalid_argument);
  CHECK_THROWS_AS((void)g.profile(), std::logic_error);
}

TEST_CASE("tensor trace and pairing against the metric itself") {
  const RadialMetric g = RadialMetric::schwarzschild({1.0, 1.0});
  for (double r : {1.0, 2.0, 7.0}) {
    const RadialTensor gt = metric_tensor(g, r);
    CHECK(gt.rr == doctest::Approx(g.a(r) * g.a(r)).epsilon(1e-15));
    CHECK(gt.ang == doctest::Approx(g.b(r) * g.b(r)).epsilon(1e-15));
    CHECK(tensor_trace(gt, g, r) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(tensor_pairing(gt, gt, g, r) ==
          doctest::Approx(3.0).epsilon(1e-14));
  }
  // Pairing is symmetric and bilinear in simple cases.
  const RadialTensor s{0.7, -0.2};
  const RadialTensor t{-1.1, 0.4};
  CHECK(tensor_pairing(s, t, g, 2.0) ==
        doctest::Approx(tensor_pairing(t, s, g, 2.0)).epsilon(1e-15));
}

TEST_CASE("inverse power series values and derivatives") {
  // f = 2 r + 0.5 - 1/r  (lead power 1).
  const RadialFunction f = inverse_power_series({2.0, 0.5, -1.0}, 1);
  CHECK(f.value(2.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(f.deriv(2.0) == doctest::Approx(2.0 + 0.25).epsilon(1e-15));
  CHECK(f.second(2.0) == doctest::Approx(-2.0 / 8.0).epsilon(1e-15));
  const RadialFunction fd =
      finite_difference_fallback([f](double r) { return f.value(r); });
  for (double r : {1.0, 3.0, 8.0}) {
    CHECK(f.deriv(r) == doctest::Approx(fd.deriv(r)).epsilon(1e-7));
    CHECK(f.second(r) == doctest::Approx(fd.second(r)).epsilon(2e-3));
  }
}

TEST_CASE("with_inner_radius preserves coefficients and family") {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const RadialMetric h = g.with_inner_radius(3.0);
  CHECK(h.inner_radius() == 3.0);
  CHECK(h.family() == MetricFamily::ConformallyFlat);
  CHECK(h.a(5.0) == doctest::Approx(g.a(5.0)).epsilon(1e-15));
  CHECK(h.b(5.0) == doctest::Approx(g.b(5.0)).epsilon(1e-15));
  CHECK(h.schwarzschild_params().r0 == 3.0);
  CHECK_THROWS_AS(g.with_inner_radius(0.5), std::invalid_argument);
}
