#ifndef CAPAFLAT_CONSTRUCTIONS_HPP_
#define CAPAFLAT_CONSTRUCTIONS_HPP_

// Deformations that move capacity in a controlled direction.
//
//   conformal_blowup:     gbar = (1 + (c-1) phi)^4 g scales capacity to
//                         exactly c * cap(g) while fixing the boundary
//                         metric (u_c = 1 on the boundary).
//   strict_H_deformation: the same family for c > 1, which also raises the
//                         boundary mean curvature by 4(c-1) dphi/dnu.
//   zsc_bump_deformation: g_t = (1 + t rho)^4 g for a nonnegative bump rho;
//                         strictly increases capacity at first order.
//   collar_capacity_bound: closed-form upper bound (area/(pi A)) (1/2 +
//                         eps/24) for the capacity of a collar of width
//                         A/2 glued to round data, from the cut-off test
//                         function on the collar.

#include "capaflat/quadrature.hpp"
#include "capaflat/radial.hpp"

namespace capaflat {

struct ConformalBlowupResult {
  RadialMetric deformed;  // GeneralRadial; quadrature only
  double cap_before = 0.0;
  double cap_after = 0.0;
  double ratio = 0.0;  // cap_after / cap_before, equals c up to quadrature
};

// Requires c > 0 and an asymptotically flat background.
ConformalBlowupResult conformal_blowup(const RadialMetric& g, double c,
                                       double quadrature_tol =
                                           quad::kDefaultTol);

struct StrictHDeformationResult {
  double boundary_H_before = 0.0;
  double boundary_H_after = 0.0;  // H + 4 (c-1) dphi/dnu at r0
  double cap_before = 0.0;
  double cap_after = 0.0;         // c * cap_before up to quadrature
};

// Requires c > 1: both the boundary mean curvature and the capacity
// strictly increase.
StrictHDeformationResult strict_H_deformation(const RadialMetric& g, double c,
                                              double quadrature_tol =
                                                  quad::kDefaultTol);

struct BumpDeformationResult {
  double cap_before = 0.0;
  double cap_after = 0.0;
  double first_order = 0.0;  // 2 cap^2 int rho a/b^2 dr (pairing with 4 rho g)
};

// rho must be >= 0, not identically zero, compactly supported in the open
// interior; 1 + t rho must stay positive.
BumpDeformationResult zsc_bump_deformation(const RadialMetric& g,
                                           const RadialFunction& rho,
                                           double support_lo,
                                           double support_hi, double t,
                                           double quadrature_tol =
                                               quad::kDefaultTol);

struct CollarParams {
  double A = 1.0;     // collar aspect parameter, > 0
  double eps = 0.0;   // profile convexity parameter, >= 0
  double area = 4.0 * 3.14159265358979323846;
};

// (area / (pi A)) * (1/2 + eps/24); decays like 1/A at fixed eps and area.
double collar_capacity_bound(const CollarParams& params);

}  // namespace capaflat

#endif  // CAPAFLAT_CONSTRUCTIONS_HPP_
