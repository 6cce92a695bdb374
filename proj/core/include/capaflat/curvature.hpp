#ifndef CAPAFLAT_CURVATURE_HPP_
#define CAPAFLAT_CURVATURE_HPP_

// Ricci and scalar curvature of the structured radial families.
//
// WarpedProduct g = dr^2 + f^2 dsigma^2:
//   Ric = -2 (f''/f) dr^2 + (1 - f'^2 - f f'') dsigma^2
//
// ConformallyFlat g = w^4 (dr^2 + r^2 dsigma^2):
//   Ric = -(4 w''/w + 4 w'/(r w) - 4 (w'/w)^2) dr^2
//         -(2 w''/w + 6 w'/(r w) + 2 (w'/w)^2) r^2 dsigma^2
//
// The scalar curvature is always formed as the tensor trace of Ric.

#include "capaflat/radial.hpp"

namespace capaflat {

struct CurvatureResult {
  RadialTensor ric;  // Ricci tensor at the requested radius
  double scalar;     // R = trace_g Ric
};

// Family-specific entry points taking the profile directly.
CurvatureResult curvature_warped(const RadialFunction& f, double r);
CurvatureResult curvature_conformal(const RadialFunction& w, double r);

// Dispatch on the metric family.  GeneralRadial metrics carry no profile
// and are rejected with std::invalid_argument (unsupported family).
CurvatureResult curvature(const RadialMetric& g, double r);

double scalar_curvature(const RadialMetric& g, double r);

}  // namespace capaflat

#endif  // CAPAFLAT_CURVATURE_HPP_
