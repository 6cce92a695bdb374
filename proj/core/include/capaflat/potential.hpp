#ifndef CAPAFLAT_POTENTIAL_HPP_
#define CAPAFLAT_POTENTIAL_HPP_

// Capacitary potentials and electrostatic capacity.
//
// On an asymptotically flat radial metric the harmonic function with
// phi(r0) = 0 and phi -> 1 at infinity reduces to the ODE
// (b^2 phi' / a)' = 0, so phi' = K a/b^2 and
//
//     cap = 1 / integral_{r0}^{inf} a/b^2 dr,        phi' = cap * a/b^2.
//
// Three independent routes to the same number are exposed: the radial
// quadrature above, the boundary flux (1/4pi) int_{dM} dphi/dnu dA with the
// normal pointing into the manifold, and the Dirichlet energy
// (1/4pi) int |grad phi|^2 dV.

#include <functional>

#include "capaflat/quadrature.hpp"
#include "capaflat/radial.hpp"

namespace capaflat {

// A radial harmonic function presented through its value and derivative.
// Only the gradient enters stress-energy tensors and the harmonic-static
// equation, but the value is kept for boundary terms and diagnostics.
struct HarmonicProfile {
  std::function<double(double)> phi;
  std::function<double(double)> dphi;
};

struct CapacitaryPotential {
  RadialMetric metric;
  std::function<double(double)> phi;   // normalized: phi(r0)=0, phi->1
  std::function<double(double)> dphi;  // cap * a/b^2, analytic
  double cap = 0.0;
  double quadrature_tol = quad::kDefaultTol;  // tolerance phi was built with
};

HarmonicProfile harmonic_profile(const CapacitaryPotential& potential);

// cap via the radial reduction.  Requires an asymptotically flat metric;
// annuli are rejected with std::invalid_argument.  A divergent integral
// (e.g. b bounded, cylindrical end) raises CapacityError.
double capacity_quadrature(const RadialMetric& g,
                           double quadrature_tol = quad::kDefaultTol);

// Full potential; phi(r) is evaluated by quadrature per call and is exact
// at the endpoints (phi(r0) = 0, limit 1 at infinity).
CapacitaryPotential capacitary_potential(
    const RadialMetric& g, double quadrature_tol = quad::kDefaultTol);

// (1/4pi) * dphi/dnu(r0) * area(r0), nu the inward (increasing-r) normal.
double capacity_flux(const CapacitaryPotential& potential);

// (1/4pi) * integral |grad phi|^2 dV over the whole manifold.
double capacity_energy(const CapacitaryPotential& potential,
                       double quadrature_tol = quad::kDefaultTol);

// Leading coefficient of the expansion phi = 1 - cap/r + O(r^-2), obtained
// by Richardson extrapolation of r (1 - phi(r)) on the radii r0 * 2^k,
// k = 4..12, with a two-term elimination in 1/r.  Raises ConvergenceError
// when the extrapolants fail to settle.
double expansion_coefficient(const CapacitaryPotential& potential);

// Dirichlet problem on a finite annulus [r0, r1] with constant boundary
// data f0 at r0 and f1 at r1.
struct AnnulusDirichletProblem {
  RadialMetric metric;  // must have finite outer radius
  double f0 = 0.0;
  double f1 = 1.0;
};

struct DirichletSolution {
  std::function<double(double)> phi_f;
  double energy = 0.0;  // int_annulus |grad phi_f|^2 dV  (no 1/4pi)
};

DirichletSolution dirichlet_functional(
    const AnnulusDirichletProblem& problem,
    double quadrature_tol = quad::kDefaultTol);

}  // namespace capaflat

#endif  // CAPAFLAT_POTENTIAL_HPP_
