#ifndef CAPAFLAT_BOUNDS_HPP_
#define CAPAFLAT_BOUNDS_HPP_

// Capacity bounds for round Bartnik data (Sigma, gamma, H) with gamma a
// round sphere metric of area |Sigma| and constant H >= 0.
//
//   bray_miao_bound: sqrt(|Sigma|/16pi) (1 + sqrt((1/16pi) int H^2 dA))
//   max_capacity_round: the sharp value sqrt(|Sigma|/16pi)
//                       (1 + H sqrt(|Sigma|/16pi)), attained by the
//                       Schwarzschild exterior inducing the data.
//
// For constant H the two expressions coincide.  The Schwarzschild
// dictionary and its Newton inversion make the equality chain
// bound = max capacity = capacity testable.

#include <span>
#include <vector>

#include "capaflat/radial.hpp"

namespace capaflat {

struct BartnikDataRound {
  double area = 4.0 * 3.14159265358979323846;  // |Sigma| > 0
  double H = 0.0;                              // constant mean curvature >= 0
};

double bray_miao_bound(const BartnikDataRound& data);
double max_capacity_round(const BartnikDataRound& data);

// Boundary data induced by spatial Schwarzschild on the sphere r = r0:
//   area = 4 pi r0^2 (1 + m/2r0)^4,
//   H    = 2 (1 - m/2r0) / (r0 (1 + m/2r0)^3).
BartnikDataRound schwarzschild_bartnik_data(const SchwarzschildParams& p);

// Inverse of the above by damped Newton iteration on (m, r0), initialized
// at r0 = sqrt(area/4pi), m = 0; residual target 1e-13.  Requires H >= 0.
SchwarzschildParams round_data_to_schwarzschild(const BartnikDataRound& data);

// Checks that an asymptotically flat radial metric is admissible as a
// competitor for the given data: boundary sphere area matches (relative
// 1e-8, else std::invalid_argument "boundary metric mismatch"), boundary
// mean curvature <= H, and nonnegative scalar curvature on a sample grid.
struct AdmissibilityReport {
  double boundary_area = 0.0;
  double boundary_H = 0.0;
  double min_scalar = 0.0;
  bool mean_curvature_ok = false;
  bool scalar_ok = false;
  bool admissible = false;
};

AdmissibilityReport admissibility(const RadialMetric& g,
                                  const BartnikDataRound& data,
                                  std::span<const double> grid,
                                  double tol = 1e-10);

// Convenience: geometric grid of n points in [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

}  // namespace capaflat

#endif  // CAPAFLAT_BOUNDS_HPP_
