#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "capaflat/potential.hpp"
#include "capaflat/quadrature.hpp"
#include "capaflat/radial.hpp"
#include "capaflat/variation.hpp"

using namespace capaflat;

TEST_CASE("smooth bump: support, peak and analytic derivatives") {
  const RadialFunction rho = smooth_bump(2.0, 4.0, 0.05);
  CHECK(rho.value(3.0) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(rho.value(2.0) == 0.0);
  CHECK(rho.value(4.0) == 0.0);
  CHECK(rho.value(1.0) == 0.0);
  CHECK(rho.value(5.0) == 0.0);
  CHECK(rho.deriv(2.0) == 0.0);
  CHECK(rho.deriv(4.0) == 0.0);
  CHECK(rho.second(4.0) == 0.0);
  CHECK(rho.deriv(3.0) == doctest::Approx(0.0).epsilon(1e-15));

  const RadialFunction fd =
      finite_difference_fallback([rho](double r) { return rho.value(r); });
  for (double r : {2.3, 2.8, 3.4, 3.9}) {
    CHECK(rho.deriv(r) == doctest::Approx(fd.deriv(r)).epsilon(1e-5));
    CHECK(rho.second(r) ==
          doctest::Approx(fd.second(r)).epsilon(1e-3).scale(1.0));
  }
}

TEST_CASE("stress-energy components and trace identity") {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const CapacitaryPotential pot = capacitary_potential(g);
  for (double r : {1.5, 3.0, 10.0}) {
    const RadialTensor S = stress_energy(g, pot, r);
    const double dp = pot.dphi(r);
    const double grad = dp / g.a(r);
    CHECK(S.rr == doctest::Approx(-0.5 * dp * dp).epsilon(1e-14));
    CHECK(S.ang ==
          doctest::Approx(0.5 * grad * grad * g.b(r) * g.b(r))
              .epsilon(1e-14));
    CHECK(tensor_trace(S, g, r) ==
          doctest::Approx(0.5 * grad * grad).epsilon(1e-13));
  }
}

TEST_CASE("gradient pairing reduces to the conformal closed form") {
  // For h = rho g the pairing is (1/2) cap^2 int rho a/b^2 dr.
  const RadialMetric g = RadialMetric::schwarzschild({1.0, 1.0});
  const CapacitaryPotential pot = capacitary_potential(g);
  const MetricPerturbation h =
      bump_perturbation(MetricPerturbation::Kind::Conformal, 2.0, 4.0, 0.05);
  const double pairing = gradient_pairing(g, pot, h);
  const double reduced =
      0.5 * pot.cap * pot.cap *
      quad::integrate(
          [&](double r) {
            return h.profile.value(r) * g.a(r) / (g.b(r) * g.b(r));
          },
          2.0, 4.0)
          .value;
  CHECK(pairing == doctest::Approx(reduced).epsilon(1e-12));
}

TEST_CASE("gradient pairing reduces to the rr closed form") {
  // For h = h_rr dr (x) dr the pairing is -(1/2) cap^2 int h_rr/(a b^2) dr.
  const RadialMetric g = RadialMetric::flat(1.0);
  const CapacitaryPotential pot = capacitary_potential(g);
  const MetricPerturbation h =
      bump_perturbation(MetricPerturbation::Kind::RadialRR, 1.5, 3.0, 0.08);
  const double pairing = gradient_pairing(g, pot, h);
  const double reduced =
      -0.5 * pot.cap * pot.cap *
      quad::integrate(
          [&](double r) {
            return h.profile.value(r) / (g.a(r) * g.b(r) * g.b(r));
          },
          1.5, 3.0)
          .value;
  CHECK(pairing == doctest::Approx(reduced).epsilon(1e-12));
}

TEST_CASE("finite differences of capacity confirm the pairing") {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const CapacitaryPotential pot = capacitary_potential(g);
  for (auto kind : {MetricPerturbation::Kind::Conformal,
                    MetricPerturbation::Kind::RadialRR}) {
    const MetricPerturbation h = bump_perturbation(kind, 1.8, 3.6, 0.07);
    const double pairing = gradient_pairing(g, pot, h);
    const double fd = capacity_fd(g, h);
    CHECK(std::abs(fd - pairing) <= 1e-6 * std::max(1.0, std::abs(pairing)));
  }
}

TEST_CASE("capacity derivative along an explicit family") {
  // cap(schwarzschild(m, 1 + t)) = 1 + t + m/2, so d cap/dt = 1.
  const double deriv = capacity_fd([](double t) {
    return RadialMetric::schwarzschild({1.0, 1.0 + t});
  });
  CHECK(deriv == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pairing against a lie derivative field vanishes") {
  for (const RadialMetric& g :
       {RadialMetric::flat(1.0), RadialMetric::schwarzschild({2.0, 1.0})}) {
    const CapacitaryPotential pot = capacitary_potential(g);
    const RadialFunction xi = smooth_bump(1.5, 3.5, 0.05);
    const double pairing = gradient_pairing(
        g, pot, lie_derivative_field(g, xi), 1.5, 3.5);
    CHECK(std::abs(pairing) < 1e-8);
  }
}

TEST_CASE("perturbed metric: identity at t = 0 and positivity guard") {
  const RadialMetric g = RadialMetric::flat(1.0);
  const MetricPerturbation h =
      bump_perturbation(MetricPerturbation::Kind::Conformal, 2.0, 4.0, 0.05);
  const RadialMetric g0 = perturbed_metric(g, h, 0.0);
  CHECK(g0.family() == MetricFamily::GeneralRadial);
  for (double r : {1.0, 2.5, 3.0, 6.0}) {
    CHECK(g0.a(r) == doctest::Approx(g.a(r)).epsilon(1e-14));
    CHECK(g0.b(r) == doctest::Approx(g.b(r)).epsilon(1e-14));
  }
  // 1 + t rho dips below zero at the peak for t = -25.
  CHECK_THROWS_AS(perturbed_metric(g, h, -25.0), std::invalid_argument);
}

TEST_CASE("perturbation support must sit inside the open interior") {
  CHECK_THROWS_AS(bump_perturbation(MetricPerturbation::Kind::Conformal, 3.0,
                                    2.0, 0.05),
                  std::invalid_argument);
  const RadialMetric g = RadialMetric::flat(1.0);
  const CapacitaryPotential pot = capacitary_potential(g);
  const MetricPerturbation h = bump_perturbation(
      MetricPerturbation::Kind::Conformal, 0.5, 2.0, 0.05);
  CHECK_THROWS_AS(gradient_pairing(g, pot, h), std::invalid_argument);
}

TEST_CASE("flow variation is 1 on schwarzschild and matches truncation") {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  CHECK(flow_variation(g, 2.0) == doctest::Approx(1.0).epsilon(1e-9));

  const RadialMetric tail = exterior_from(g, 2.0);
  CHECK(tail.inner_radius() == 2.0);
  CHECK(capacity_quadrature(tail) == doctest::Approx(3.0).epsilon(1e-12));
}
