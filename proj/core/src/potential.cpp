#include "capaflat/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace capaflat {

namespace {

constexpr double kPi = std::numbers::pi;

std::function<double(double)> radial_weight(const RadialMetric& g) {
  return [g](double r) {
    const double b = g.b(r);
    return g.a(r) / (b * b);
  };
}

void require_asymptotically_flat(const RadialMetric& g, const char* op) {
  if (!g.asymptotically_flat()) {
    throw std::invalid_argument(
        std::string(op) +
        " requires an asymptotically flat metric (finite annulus given)");
  }
}

// Integral of a/b^2 from r out to infinity; the tail whose reciprocal
// normalizes the potential.
double tail_integral(const RadialMetric& g, double r, double tol) {
  return quad::integrate_to_infinity(radial_weight(g), r, tol).value;
}

}  // namespace

HarmonicProfile harmonic_profile(const CapacitaryPotential& potential) {
  return HarmonicProfile{potential.phi, potential.dphi};
}

double capacity_quadrature(const RadialMetric& g, double quadrature_tol) {
  require_asymptotically_flat(g, "capacity");
  double I = 0.0;
  try {
    I = tail_integral(g, g.inner_radius(), quadrature_tol);
  } catch (const ConvergenceError& e) {
    throw CapacityError(
        std::string("capacity zero or undefined: the radial integral of "
                    "a/b^2 did not converge (estimate ") +
        std::to_string(e.estimate) + ")");
  }
  if (!(I > 0.0) || !std::isfinite(I)) {
    throw CapacityError("capacity zero or undefined: degenerate integral");
  }
  return 1.0 / I;
}

CapacitaryPotential capacitary_potential(const RadialMetric& g,
                                         double quadrature_tol) {
  const double cap = capacity_quadrature(g, quadrature_tol);
  const double r0 = g.inner_radius();
  auto weight = radial_weight(g);

  CapacitaryPotential out;
  out.metric = g;
  out.cap = cap;
  out.quadrature_tol = quadrature_tol;
  out.phi = [weight, cap, r0, quadrature_tol](double r) {
    if (r <= r0) return 0.0;
    return cap * quad::integrate(weight, r0, r, quadrature_tol).value;
  };
  out.dphi = [g, cap](double r) {
    const double b = g.b(r);
    return cap * g.a(r) / (b * b);
  };
  return out;
}

double capacity_flux(const CapacitaryPotential& potential) {
  const RadialMetric& g = potential.metric;
  const double r0 = g.inner_radius();
  // dphi/dnu with nu the inward-pointing (increasing-r) unit normal.
  const double normal_derivative = potential.dphi(r0) / g.a(r0);
  return normal_derivative * sphere_area(g, r0) / (4.0 * kPi);
}

double capacity_energy(const CapacitaryPotential& potential,
                       double quadrature_tol) {
  const RadialMetric& g = potential.metric;
  require_asymptotically_flat(g, "capacity energy");
  auto integrand = [&potential, g](double r) {
    const double dphi = potential.dphi(r);
    const double b = g.b(r);
    return dphi * dphi * b * b / g.a(r);
  };
  return quad::integrate_to_infinity(integrand, g.inner_radius(),
                                     quadrature_tol)
      .value;
}

double expansion_coefficient(const CapacitaryPotential& potential) {
  const RadialMetric& g = potential.metric;
  require_asymptotically_flat(g, "expansion coefficient");
  const double r0 = g.inner_radius();
  const double cap = potential.cap;
  const double tol = potential.quadrature_tol;

  // 1 - phi(r) = cap * tail(r) evaluated directly to avoid cancellation;
  // r (1 - phi(r)) = cap + O(1/r) by the asymptotic expansion of phi.
  std::vector<double> samples;
  for (int k = 4; k <= 12; ++k) {
    const double r = r0 * std::pow(2.0, k);
    const double tail = tail_integral(g, r, tol / r);
    samples.push_back(r * cap * tail);
  }

  // Richardson elimination of the 1/r and 1/r^2 error terms on radii that
  // double between samples.
  std::vector<double> first(samples.size() - 1);
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    first[k] = 2.0 * samples[k + 1] - samples[k];
  }
  std::vector<double> second(first.size() - 1);
  for (std::size_t k = 0; k + 1 < first.size(); ++k) {
    second[k] = (4.0 * first[k + 1] - first[k]) / 3.0;
  }

  const double result = second.back();
  const double settle = std::abs(second.back() - second[second.size() - 2]);
  if (!(settle <= 1e-8 * std::max(1.0, std::abs(result)))) {
    throw ConvergenceError(
        "expansion coefficient extrapolation did not settle", result, settle);
  }
  return result;
}

DirichletSolution dirichlet_functional(const AnnulusDirichletProblem& problem,
                                       double quadrature_tol) {
  const RadialMetric& g = problem.metric;
  if (g.asymptotically_flat()) {
    throw std::invalid_argument(
        "Dirichlet functional requires a finite annulus (outer radius "
        "infinite)");
  }
  const double r0 = g.inner_radius();
  const double r1 = g.outer_radius();
  auto weight = radial_weight(g);
  const double I = quad::integrate(weight, r0, r1, quadrature_tol).value;
  if (!(I > 0.0) || !std::isfinite(I)) {
    throw std::invalid_argument("degenerate annulus: integral of a/b^2");
  }

  const double f0 = problem.f0;
  const double f1 = problem.f1;
  DirichletSolution out;
  out.phi_f = [weight, I, f0, f1, r0, quadrature_tol](double r) {
    const double s = quad::integrate(weight, r0, r, quadrature_tol).value;
    return f0 + (f1 - f0) * s / I;
  };
  // |grad phi_f|^2 dV integrates to 4 pi (f1-f0)^2 / I along the radial
  // reduction; no 1/(4 pi) normalization for the raw Dirichlet energy.
  out.energy = 4.0 * kPi * (f1 - f0) * (f1 - f0) / I;
  return out;
}

}  // namespace capaflat
