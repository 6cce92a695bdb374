#ifndef CAPAFLAT_RADIAL_HPP_
#define CAPAFLAT_RADIAL_HPP_

// Radial metrics on 3-manifolds with 2-sphere symmetry.
//
// Every metric handled by this library has the form
//
//     g = a(r)^2 dr^2 + b(r)^2 dsigma^2,    r in [r0, r1],
//
// where dsigma^2 is the unit round metric on S^2.  Two structured families
// carry curvature formulas:
//
//   WarpedProduct:     g = dr^2 + f(r)^2 dsigma^2          (a = 1,   b = f)
//   ConformallyFlat:   g = w(r)^4 (dr^2 + r^2 dsigma^2)    (a = w^2, b = r w^2)
//
// A third family, GeneralRadial, stores arbitrary coefficient pairs (a, b).
// It arises from conformal deformations of the structured families and is
// accepted by quadrature-based operations only; curvature requests on it
// fail with an unsupported-family error.

#include <functional>
#include <limits>
#include <vector>

namespace capaflat {

inline constexpr double kInfiniteRadius =
    std::numeric_limits<double>::infinity();

// Smooth scalar function of the radial coordinate together with its first
// and second derivatives.  All higher-level operations differentiate
// analytically; the divided-difference fallback below exists so tests can
// cross-check hand-coded derivatives, never as a production path.
struct RadialFunction {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> second;

  double operator()(double r) const { return value(r); }
};

RadialFunction constant_function(double c);

// f(r) = r (with exact derivatives); profile of the flat warped product.
RadialFunction coordinate_function();

// Truncated series in inverse powers of r:
//   f(r) = sum_k coeffs[k] * r^(lead_power - k).
// lead_power = 1 suits warped profiles (f ~ c0 r at infinity), lead_power = 0
// conformal factors (w -> c0).
RadialFunction inverse_power_series(std::vector<double> coeffs,
                                    int lead_power);

// Central-difference derivatives with step h = max(1e-6, 1e-6*|r|).
// Cross-checking aid only; accuracy is limited to ~1e-6 relative.
RadialFunction finite_difference_fallback(std::function<double(double)> f);

// Symmetric 2-tensor invariant under the sphere action, evaluated at one
// radius: T = rr * dr (x) dr + ang * dsigma^2.  The `ang` entry multiplies
// the *unit* round metric, so for the metric itself ang = b^2.
struct RadialTensor {
  double rr = 0.0;
  double ang = 0.0;
};

enum class MetricFamily {
  WarpedProduct,
  ConformallyFlat,
  GeneralRadial,
};

struct SchwarzschildParams {
  double m = 0.0;   // mass; any sign
  double r0 = 1.0;  // inner boundary radius in isotropic coordinates
};

class RadialMetric {
 public:
  // The flat exterior {r >= 1}; same as flat(1.0).  Exists so aggregates
  // holding a metric (problem descriptions, results) can be built field by
  // field.
  RadialMetric();

  // Structured families.  The profile must be positive on [r0, r1]; this is
  // asserted by sampling at construction.  ConformallyFlat requires r0 > 0
  // (the coordinate radius enters b = r w^2); WarpedProduct bands may use
  // any interval, e.g. [-pi/2 + d, pi/2 - d] for the round-sphere band.
  static RadialMetric warped_product(RadialFunction f, double r0,
                                     double r1 = kInfiniteRadius);
  static RadialMetric conformally_flat(RadialFunction w, double r0,
                                       double r1 = kInfiniteRadius);

  // Unstructured coefficients; quadrature operations only.
  static RadialMetric general_radial(RadialFunction a, RadialFunction b,
                                     double r0,
                                     double r1 = kInfiniteRadius);

  // Flat R^3 exterior as a warped product (f(r) = r).
  static RadialMetric flat(double r0, double r1 = kInfiniteRadius);

  // Spatial Schwarzschild in isotropic coordinates, w = 1 + m/(2r).
  // Requires r0 >= m/2 for m > 0 (boundary outside or at the horizon) and
  // r0 > -m/2 for m < 0 (conformal factor positive).
  static RadialMetric schwarzschild(SchwarzschildParams params,
                                    double r1 = kInfiniteRadius);

  // Band in the round 3-sphere of curvature +6: f(r) = cos r on
  // [r0, r1] inside (-pi/2, pi/2).
  static RadialMetric sphere_band(double r0, double r1);

  MetricFamily family() const { return family_; }
  double inner_radius() const { return r0_; }
  double outer_radius() const { return r1_; }
  bool asymptotically_flat() const { return r1_ == kInfiniteRadius; }

  // Warped/conformal profile (f or w).  Throws for GeneralRadial.
  const RadialFunction& profile() const;

  // Coefficients of g = a^2 dr^2 + b^2 dsigma^2 and their r-derivatives.
  double a(double r) const { return a_.value(r); }
  double da(double r) const { return a_.deriv(r); }
  double d2a(double r) const { return a_.second(r); }
  double b(double r) const { return b_.value(r); }
  double db(double r) const { return b_.deriv(r); }
  double d2b(double r) const { return b_.second(r); }

  // Bundled Schwarzschild parameters when this metric was built by
  // schwarzschild(); throws otherwise.
  const SchwarzschildParams& schwarzschild_params() const;

  // The same coefficients restricted to [new_r0, r1]; new_r0 must lie in
  // [r0, r1).  Family and profile are preserved.
  RadialMetric with_inner_radius(double new_r0) const;

 private:
  struct Unset {};
  explicit RadialMetric(Unset) {}

  MetricFamily family_ = MetricFamily::GeneralRadial;
  RadialFunction profile_;
  RadialFunction a_;
  RadialFunction b_;
  double r0_ = 1.0;
  double r1_ = kInfiniteRadius;
  bool has_schwarzschild_params_ = false;
  SchwarzschildParams schwarzschild_params_{};
};

// g itself as a RadialTensor at radius r: (a^2, b^2).
RadialTensor metric_tensor(const RadialMetric& g, double r);

// trace_g T = T_rr / a^2 + 2 T_ang / b^2.
double tensor_trace(const RadialTensor& T, const RadialMetric& g, double r);

// <S, T>_g = S_rr T_rr / a^4 + 2 S_ang T_ang / b^4.
double tensor_pairing(const RadialTensor& S, const RadialTensor& T,
                      const RadialMetric& g, double r);

// Area of the coordinate sphere {r = const}: 4 pi b(r)^2.
double sphere_area(const RadialMetric& g, double r);

// Mean curvature of the coordinate sphere with respect to the unit normal
// pointing toward increasing r: H = 2 b'(r) / (a(r) b(r)).
double mean_curvature_sphere(const RadialMetric& g, double r);

}  // namespace capaflat

#endif  // CAPAFLAT_RADIAL_HPP_
