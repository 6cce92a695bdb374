#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "capaflat/errors.hpp"
#include "capaflat/potential.hpp"
#include "capaflat/radial.hpp"

using namespace capaflat;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("schwarzschild capacity equals r0 + m/2 by all three routes") {
  const double cases[4][2] = {{2.0, 1.0}, {1.0, 1.0}, {-1.0, 1.0}, {2.0, 3.0}};
  for (const auto& c : cases) {
    const double m = c[0];
    const double r0 = c[1];
    const RadialMetric g = RadialMetric::schwarzschild({m, r0});
    const double exact = r0 + 0.5 * m;
    const CapacitaryPotential pot = capacitary_potential(g);
    CHECK(pot.cap == doctest::Approx(exact).epsilon(1e-12));
    CHECK(capacity_flux(pot) == doctest::Approx(exact).epsilon(1e-12));
    CHECK(capacity_energy(pot) == doctest::Approx(exact).epsilon(1e-10));
  }
}

TEST_CASE("flat exterior capacity equals the boundary radius") {
  CHECK(capacity_quadrature(RadialMetric::flat(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(capacity_quadrature(RadialMetric::flat(2.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("capacitary potential matches the schwarzschild closed form") {
  // phi = (r - r0)/(r + m/2), phi' = (r0 + m/2)/(r + m/2)^2.
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const CapacitaryPotential pot = capacitary_potential(g);
  CHECK(pot.phi(1.0) == 0.0);
  CHECK(pot.phi(3.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pot.dphi(3.0) == doctest::Approx(0.125).epsilon(1e-13));
  // Decay toward 1 at the cap/r rate.
  CHECK(1.0 - pot.phi(1e6) == doctest::Approx(2e-6).epsilon(1e-5));
  // Monotone increasing.
  CHECK(pot.phi(2.0) < pot.phi(4.0));
}

TEST_CASE("harmonic profile view shares the potential data") {
  const RadialMetric g = RadialMetric::flat(1.0);
  const CapacitaryPotential pot = capacitary_potential(g);
  const HarmonicProfile prof = harmonic_profile(pot);
  CHECK(prof.phi(2.0) == doctest::Approx(pot.phi(2.0)).epsilon(1e-15));
  CHECK(prof.dphi(2.0) == doctest::Approx(pot.dphi(2.0)).epsilon(1e-15));
}

TEST_CASE("annuli are rejected, divergent integrals raise CapacityError") {
  const RadialMetric annulus = RadialMetric::flat(1.0, 4.0);
  CHECK_THROWS_AS(capacity_quadrature(annulus), std::invalid_argument);
  CHECK_THROWS_AS(capacitary_potential(annulus), std::invalid_argument);

  // Cylindrical end: b bounded, the defining integral diverges and the
  // capacity is zero.
  const RadialMetric cylinder =
      RadialMetric::warped_product(constant_function(1.0), 1.0);
  CHECK_THROWS_AS(capacity_quadrature(cylinder), CapacityError);
}

TEST_CASE("expansion coefficient recovers the capacity") {
  const CapacitaryPotential flat_pot =
      capacitary_potential(RadialMetric::flat(1.0));
  CHECK(expansion_coefficient(flat_pot) ==
        doctest::Approx(1.0).epsilon(1e-7));
  const CapacitaryPotential schw_pot =
      capacitary_potential(RadialMetric::schwarzschild({2.0, 1.0}));
  CHECK(expansion_coefficient(schw_pot) ==
        doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("dirichlet problem on a flat annulus") {
  // On [1, 2]: phi = 2 (1 - 1/r), energy = 4 pi (f1-f0)^2 / int_1^2 r^-2.
  AnnulusDirichletProblem problem;
  problem.metric = RadialMetric::flat(1.0, 2.0);
  const DirichletSolution sol = dirichlet_functional(problem);
  CHECK(sol.phi_f(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sol.phi_f(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sol.phi_f(1.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(sol.energy == doctest::Approx(8.0 * kPi).epsilon(1e-12));

  // General boundary data shifts and scales affinely.
  AnnulusDirichletProblem shifted = problem;
  shifted.f0 = 1.0;
  shifted.f1 = 3.0;
  const DirichletSolution sol2 = dirichlet_functional(shifted);
  CHECK(sol2.phi_f(1.5) ==
        doctest::Approx(1.0 + 2.0 * 2.0 / 3.0).epsilon(1e-12));
  CHECK(sol2.energy == doctest::Approx(4.0 * 8.0 * kPi).epsilon(1e-12));

  AnnulusDirichletProblem bad = problem;
  bad.metric = RadialMetric::flat(1.0);
  CHECK_THROWS_AS(dirichlet_functional(bad), std::invalid_argument);
}

TEST_CASE("capacity agrees between truncations at the same radius") {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const RadialMetric h = g.with_inner_radius(2.5);
  CHECK(capacity_quadrature(h) == doctest::Approx(3.5).epsilon(1e-12));
}
