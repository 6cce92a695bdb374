#ifndef CAPAFLAT_VARIATION_HPP_
#define CAPAFLAT_VARIATION_HPP_

// First variation of capacity under metric deformations.
//
// The stress-energy tensor of the capacitary potential,
//
//     S_phi = -dphi (x) dphi + (1/2) |grad phi|^2 g,
//
// is the L^2-gradient of g -> 4 pi cap(g): for a compactly supported
// symmetric perturbation h,
//
//     d/dt cap(g + t h) |_{t=0} = (1/4pi) int <S_phi, h>_g dV.
//
// This module evaluates both sides independently: the pairing by radial
// quadrature and the left side by central finite differences of the
// capacity of the deformed metric (with one Richardson elimination).

#include <functional>

#include "capaflat/potential.hpp"
#include "capaflat/quadrature.hpp"
#include "capaflat/radial.hpp"

namespace capaflat {

// Radial symmetric 2-tensor field, e.g. a metric perturbation h(r).
using RadialTensorField = std::function<RadialTensor(double)>;

// Compactly supported perturbation of a radial metric.  Two structured
// kinds are provided:
//   Conformal: h = rho g             (profile = rho)
//   RadialRR:  h = h_rr dr (x) dr    (profile = h_rr)
// The profile must vanish with two derivatives at the ends of
// [support_lo, support_hi] and be zero outside.
struct MetricPerturbation {
  enum class Kind { Conformal, RadialRR };

  Kind kind = Kind::Conformal;
  RadialFunction profile;
  double support_lo = 0.0;
  double support_hi = 0.0;

  // The perturbation as a tensor field over the given background.
  RadialTensorField as_tensor_field(const RadialMetric& g) const;
};

// C^infinity bump scaled to [lo, hi] with peak value `amplitude` at the
// midpoint: amplitude * exp(1 - 1/(1 - x^2)) in the affine coordinate
// x : [lo, hi] -> [-1, 1].  All derivatives vanish at the endpoints.
RadialFunction smooth_bump(double lo, double hi, double amplitude);

MetricPerturbation bump_perturbation(MetricPerturbation::Kind kind, double lo,
                                     double hi, double amplitude);

// S_phi at radius r.  For a radial potential the components are
//   S_rr  = -(1/2) phi'^2,      S_ang = (1/2) (phi'/a)^2 b^2.
RadialTensor stress_energy(const RadialMetric& g,
                           const CapacitaryPotential& potential, double r);
RadialTensor stress_energy(const RadialMetric& g,
                           const HarmonicProfile& potential, double r);

// (1/4pi) int <S_phi, h> dV for a compactly supported h.
double gradient_pairing(const RadialMetric& g,
                        const CapacitaryPotential& potential,
                        const MetricPerturbation& h,
                        double quadrature_tol = quad::kDefaultTol);
double gradient_pairing(const RadialMetric& g,
                        const CapacitaryPotential& potential,
                        const RadialTensorField& h, double support_lo,
                        double support_hi,
                        double quadrature_tol = quad::kDefaultTol);

// The background deformed by t * h, returned as a GeneralRadial metric
// valid for quadrature only:
//   Conformal: (a, b) -> (sqrt(1 + t rho) a, sqrt(1 + t rho) b)
//   RadialRR:  a -> sqrt(a^2 + t h_rr)
RadialMetric perturbed_metric(const RadialMetric& g,
                              const MetricPerturbation& h, double t);

// d/dt cap(family(t)) at t = 0 by central differences with one Richardson
// elimination: D(delta) and D(delta/2) combined to O(delta^4).
double capacity_fd(const std::function<RadialMetric(double)>& family,
                   double delta = 1e-3,
                   double quadrature_tol = quad::kDefaultTol);
double capacity_fd(const RadialMetric& g, const MetricPerturbation& h,
                   double delta = 1e-3,
                   double quadrature_tol = quad::kDefaultTol);

// Lie derivative of g along the radial field X = xi(r) d/dr:
//   (L_X g)_rr = 2 a^2 xi' + (a^2)' xi,   (L_X g)_ang = (b^2)' xi.
// Pairing against it must vanish (diffeomorphism invariance); used as a
// divergence-free certificate for S_phi.
RadialTensorField lie_derivative_field(const RadialMetric& g,
                                       const RadialFunction& xi);

// Rate of change of cap(S_r) as the inner boundary sphere flows outward
// with coordinate speed d/dr, computed from the flux formula
//   (1/4pi) int_{S_r} |grad phi_r|^2 <X, nu> dA,
// where phi_r is the capacitary potential of the exterior manifold beyond
// radius r.  For Schwarzschild this equals 1 identically.
double flow_variation(const RadialMetric& g, double r,
                      double quadrature_tol = quad::kDefaultTol);

// The manifold truncated at inner radius r >= inner_radius().
RadialMetric exterior_from(const RadialMetric& g, double r);

}  // namespace capaflat

#endif  // CAPAFLAT_VARIATION_HPP_
