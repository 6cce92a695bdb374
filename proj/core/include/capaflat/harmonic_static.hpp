#ifndef CAPAFLAT_HARMONIC_STATIC_HPP_
#define CAPAFLAT_HARMONIC_STATIC_HPP_

// The harmonic-static equation L*_g u = S_phi, where
//
//     L*_g u = Hess u - (Lap u) g - u Ric
//
// is the formal adjoint of the linearized scalar curvature and S_phi the
// stress-energy tensor of a harmonic potential phi.  Closed-form solution
// families are provided for the flat exterior, spatial Schwarzschild and a
// band in the round 3-sphere, plus a Cartesian cross-check on flat space
// and a numerical integrator for the radial ODE system.

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "capaflat/potential.hpp"
#include "capaflat/radial.hpp"

namespace capaflat {

enum class HSExample {
  Flat,         // u = -r0^2/(8 r^2) + C                     on f(r) = r
  Schwarzschild,  // u = -(m+2r0)^2/(32 r^2 w^2) + C (1-m/2r)/(1+m/2r)
  CartesianZ,   // u = (x^2 + y^2 - 3 z^2)/8, phi = z; not radial
  Sphere,       // u = C sin r + (3 - sec^2 r)/8
                //     + (3/8) sin r (log cos r - log(1 + sin r)), phi = tan r
  Numeric,      // produced by solve_hs_ode
};

struct HSExampleParams {
  double r0 = 1.0;  // inner boundary (Flat, Schwarzschild)
  double m = 0.0;   // mass (Schwarzschild)
  double C = 0.0;   // coefficient of the radial kernel element
};

struct HSPotential {
  RadialFunction u;        // value and two analytic derivatives
  double kernel_coeff = 0.0;
  HSExample source = HSExample::Numeric;
};

// L*_g u at radius r; structured families only.
RadialTensor lstar(const RadialMetric& g, const RadialFunction& u, double r);

// Laplace-Beltrami operator applied to a radial function.
double laplacian(const RadialMetric& g, const RadialFunction& u, double r);

// The radial kernel element of L* for the example family (constants for
// flat, the static potential for Schwarzschild, sin r for the sphere band).
RadialFunction hs_kernel_element(HSExample id, const HSExampleParams& params);

// Closed-form solution of L*u = S_phi for the radial examples.  CartesianZ
// is not radial and is rejected; see cartesian_example3_check.
HSPotential example_solution(HSExample id, const HSExampleParams& params);

// Metric + harmonic potential + solution bundled for an example.
struct HSExampleProblem {
  RadialMetric metric;
  HarmonicProfile phi;
  HSPotential u;
};

HSExampleProblem example_problem(HSExample id, const HSExampleParams& params);

// Pointwise residual L*u - S_phi over a grid.  sup_norm takes the
// g-invariant tensor norm sqrt(<T, T>_g) at each grid point.
struct HSResidual {
  std::function<RadialTensor(double)> tensor_residual;
  std::function<double(double)> trace_residual;  // trace_g (L*u - S_phi)
  std::vector<double> grid;
  double sup_norm = 0.0;
};

HSResidual hs_residual(const RadialMetric& g, const HarmonicProfile& phi,
                       const HSPotential& u, std::span<const double> grid);

// Residual of the traced form  Hess u = u Ric - dphi (x) dphi
// + (1/4)|grad phi|^2 g  (the scalar-flat reduction of L*u = S_phi).
RadialTensor traced_form_residual(const RadialMetric& g,
                                  const HarmonicProfile& phi,
                                  const RadialFunction& u, double r);

// |trace(L*u) + 2 Lap u + u R|  at radius r; an algebraic identity of L*,
// so this vanishes for every smooth u, solution or not.
double trace_identity_consistency(const RadialMetric& g,
                                  const RadialFunction& u, double r);

// |(-2 Lap u - u R) - (1/2)|grad phi|^2|  at radius r; holds when u solves
// the harmonic-static equation.
double trace_identity_residual(const RadialMetric& g,
                               const HarmonicProfile& phi,
                               const RadialFunction& u, double r);

// Cartesian flat-space check of Example CartesianZ: phi = z,
// u = (x^2+y^2-3z^2)/8, L*u = diag(1/2, 1/2, -1/2) = S_phi exactly.
// Returns the sup over sample points of the max-abs componentwise residual.
enum class Example3Variant {
  Full,             // honest pair: residual 0 in exact arithmetic
  ZeroPotential,    // u replaced by 0: residual = |S_phi| = 1/2
  ConstantHarmonic  // phi replaced by a constant: residual = |L*u| = 1/2
};

double cartesian_example3_check(
    std::span<const std::array<double, 3>> points,
    Example3Variant variant = Example3Variant::Full);

// First-order (dr^2) and second-order (dsigma^2) ODE residuals of the
// sphere-band example at radius r:
//   res1 = tan r u' - u + (1/4) sec^4 r
//   res2 = -u'' + tan r u' - 2u - (1/2) sec^4 r
std::array<double, 2> example4_ode_residuals(const HSPotential& u, double r);

// Numerical integration of the harmonic-static ODE system.  The second
// order equation is the dsigma^2 component of L*u = S_phi solved for u'';
// the first-order dr^2 component is not imposed and its sup-norm over the
// grid is reported as a compatibility defect (it vanishes exactly on
// honest harmonic-static initial data).
struct HSOdeSolution {
  HSPotential potential;  // source = Numeric; Hermite interpolant
  std::vector<double> grid;
  std::vector<double> u;
  std::vector<double> du;
  double compatibility_defect = 0.0;
};

HSOdeSolution solve_hs_ode(const RadialMetric& g, const HarmonicProfile& phi,
                           double u0, double du0,
                           std::span<const double> grid, double step = 1e-2);

// Scalar curvature sampled over a grid; max |R - mean| certifies constancy.
struct ScalarConstancyReport {
  std::vector<double> values;
  double mean = 0.0;
  double max_deviation = 0.0;
};

ScalarConstancyReport scalar_constancy_check(const RadialMetric& g,
                                             std::span<const double> grid);

}  // namespace capaflat

#endif  // CAPAFLAT_HARMONIC_STATIC_HPP_
