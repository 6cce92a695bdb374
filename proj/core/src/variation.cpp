#include "capaflat/variation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace capaflat {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_support(const RadialMetric& g, double lo, double hi,
                      const char* what) {
  if (!(g.inner_radius() < lo && lo < hi && hi < g.outer_radius()) ||
      !std::isfinite(hi)) {
    throw std::invalid_argument(
        std::string(what) +
        " support must satisfy r0 < lo < hi < r1 with hi finite");
  }
}

RadialTensor stress_energy_from_gradient(const RadialMetric& g, double dphi,
                                         double r) {
  const double a = g.a(r);
  const double b = g.b(r);
  const double grad = dphi / a;  // |grad phi|
  RadialTensor S;
  S.rr = -0.5 * dphi * dphi;
  S.ang = 0.5 * grad * grad * b * b;
  return S;
}

}  // namespace

RadialFunction smooth_bump(double lo, double hi, double amplitude) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("bump interval must be finite with lo < hi");
  }
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  // amplitude * exp(1 - 1/(1-x^2)) in x = (r - mid)/half; underflow near
  // |x| = 1 is cut off before the rational prefactors can produce inf * 0.
  auto pieces = [mid, half, amplitude](double r, int d) {
    const double x = (r - mid) / half;
    const double q = 1.0 - x * x;
    if (!(q > 1e-12)) return 0.0;
    const double e = amplitude * std::exp(1.0 - 1.0 / q);
    if (d == 0) return e;
    const double g1 = -2.0 * x / (q * q);  // d/dx of the exponent
    if (d == 1) return e * g1 / half;
    const double g2 = -2.0 / (q * q) - 8.0 * x * x / (q * q * q);
    return e * (g1 * g1 + g2) / (half * half);
  };
  return RadialFunction{
      [pieces](double r) { return pieces(r, 0); },
      [pieces](double r) { return pieces(r, 1); },
      [pieces](double r) { return pieces(r, 2); },
  };
}

MetricPerturbation bump_perturbation(MetricPerturbation::Kind kind, double lo,
                                     double hi, double amplitude) {
  MetricPerturbation h;
  h.kind = kind;
  h.profile = smooth_bump(lo, hi, amplitude);
  h.support_lo = lo;
  h.support_hi = hi;
  return h;
}

RadialTensorField MetricPerturbation::as_tensor_field(
    const RadialMetric& g) const {
  validate_support(g, support_lo, support_hi, "perturbation");
  const RadialFunction rho = profile;
  if (kind == Kind::Conformal) {
    return [rho, g](double r) {
      const double v = rho.value(r);
      const double a = g.a(r);
      const double b = g.b(r);
      return RadialTensor{v * a * a, v * b * b};
    };
  }
  return [rho](double r) { return RadialTensor{rho.value(r), 0.0}; };
}

RadialTensor stress_energy(const RadialMetric& g,
                           const CapacitaryPotential& potential, double r) {
  return stress_energy_from_gradient(g, potential.dphi(r), r);
}

RadialTensor stress_energy(const RadialMetric& g,
                           const HarmonicProfile& potential, double r) {
  return stress_energy_from_gradient(g, potential.dphi(r), r);
}

double gradient_pairing(const RadialMetric& g,
                        const CapacitaryPotential& potential,
                        const RadialTensorField& h, double support_lo,
                        double support_hi, double quadrature_tol) {
  validate_support(g, support_lo, support_hi, "perturbation");
  auto integrand = [&](double r) {
    const RadialTensor S = stress_energy(g, potential, r);
    const double a = g.a(r);
    const double b = g.b(r);
    return tensor_pairing(S, h(r), g, r) * a * b * b;
  };
  // (1/4pi) int <S,h> dV; the 4 pi from the sphere measure cancels.
  return quad::integrate(integrand, support_lo, support_hi, quadrature_tol)
      .value;
}

double gradient_pairing(const RadialMetric& g,
                        const CapacitaryPotential& potential,
                        const MetricPerturbation& h, double quadrature_tol) {
  return gradient_pairing(g, potential, h.as_tensor_field(g), h.support_lo,
                          h.support_hi, quadrature_tol);
}

RadialMetric perturbed_metric(const RadialMetric& g,
                              const MetricPerturbation& h, double t) {
  validate_support(g, h.support_lo, h.support_hi, "perturbation");
  const RadialFunction rho = h.profile;

  if (h.kind == MetricPerturbation::Kind::Conformal) {
    // a_t = sqrt(1 + t rho) a, b_t = sqrt(1 + t rho) b.
    auto scale = [rho, t](double r, int d) {
      const double s = 1.0 + t * rho.value(r);
      if (!(s > 0.0)) {
        throw std::invalid_argument(
            "conformal deformation factor 1 + t rho must stay positive");
      }
      const double root = std::sqrt(s);
      if (d == 0) return root;
      const double sp = t * rho.deriv(r);
      if (d == 1) return 0.5 * sp / root;
      const double spp = t * rho.second(r);
      return 0.5 * spp / root - 0.25 * sp * sp / (root * s);
    };
    RadialFunction a_t{
        [scale, g](double r) { return scale(r, 0) * g.a(r); },
        [scale, g](double r) {
          return scale(r, 1) * g.a(r) + scale(r, 0) * g.da(r);
        },
        [scale, g](double r) {
          return scale(r, 2) * g.a(r) + 2.0 * scale(r, 1) * g.da(r) +
                 scale(r, 0) * g.d2a(r);
        },
    };
    RadialFunction b_t{
        [scale, g](double r) { return scale(r, 0) * g.b(r); },
        [scale, g](double r) {
          return scale(r, 1) * g.b(r) + scale(r, 0) * g.db(r);
        },
        [scale, g](double r) {
          return scale(r, 2) * g.b(r) + 2.0 * scale(r, 1) * g.db(r) +
                 scale(r, 0) * g.d2b(r);
        },
    };
    return RadialMetric::general_radial(a_t, b_t, g.inner_radius(),
                                        g.outer_radius());
  }

  // RadialRR: a_t = sqrt(a^2 + t h_rr), b unchanged.
  RadialFunction a_t{
      [rho, t, g](double r) {
        const double a = g.a(r);
        const double s = a * a + t * rho.value(r);
        if (!(s > 0.0)) {
          throw std::invalid_argument(
              "dr^2 deformation must keep a^2 + t h_rr positive");
        }
        return std::sqrt(s);
      },
      [rho, t, g](double r) {
        const double a = g.a(r);
        const double s = a * a + t * rho.value(r);
        const double sp = 2.0 * a * g.da(r) + t * rho.deriv(r);
        return 0.5 * sp / std::sqrt(s);
      },
      [rho, t, g](double r) {
        const double a = g.a(r);
        const double s = a * a + t * rho.value(r);
        const double sp = 2.0 * a * g.da(r) + t * rho.deriv(r);
        const double spp = 2.0 * (g.da(r) * g.da(r) + a * g.d2a(r)) +
                           t * rho.second(r);
        const double root = std::sqrt(s);
        return 0.5 * spp / root - 0.25 * sp * sp / (root * s);
      },
  };
  RadialFunction b_t{
      [g](double r) { return g.b(r); },
      [g](double r) { return g.db(r); },
      [g](double r) { return g.d2b(r); },
  };
  return RadialMetric::general_radial(a_t, b_t, g.inner_radius(),
                                      g.outer_radius());
}

double capacity_fd(const std::function<RadialMetric(double)>& family,
                   double delta, double quadrature_tol) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  auto central = [&](double d) {
    const double plus = capacity_quadrature(family(d), quadrature_tol);
    const double minus = capacity_quadrature(family(-d), quadrature_tol);
    return (plus - minus) / (2.0 * d);
  };
  const double coarse = central(delta);
  const double fine = central(0.5 * delta);
  // One Richardson level: O(delta^2) -> O(delta^4).
  return (4.0 * fine - coarse) / 3.0;
}

double capacity_fd(const RadialMetric& g, const MetricPerturbation& h,
                   double delta, double quadrature_tol) {
  return capacity_fd(
      [&g, &h](double t) { return perturbed_metric(g, h, t); }, delta,
      quadrature_tol);
}

RadialTensorField lie_derivative_field(const RadialMetric& g,
                                       const RadialFunction& xi) {
  return [g, xi](double r) {
    const double a = g.a(r);
    const double b = g.b(r);
    const double v = xi.value(r);
    const double vp = xi.deriv(r);
    RadialTensor h;
    h.rr = 2.0 * a * a * vp + 2.0 * a * g.da(r) * v;
    h.ang = 2.0 * b * g.db(r) * v;
    return h;
  };
}

RadialMetric exterior_from(const RadialMetric& g, double r) {
  return g.with_inner_radius(r);
}

double flow_variation(const RadialMetric& g, double r, double quadrature_tol) {
  if (!(r >= g.inner_radius() && r < g.outer_radius())) {
    throw std::invalid_argument("flow radius must lie in [r0, r1)");
  }
  const RadialMetric exterior = g.with_inner_radius(r);
  const CapacitaryPotential potential =
      capacitary_potential(exterior, quadrature_tol);
  const double a = exterior.a(r);
  const double grad = potential.dphi(r) / a;   // |grad phi| on the sphere
  const double speed = a;                       // <d/dr, nu>, nu = (1/a) d/dr
  return grad * grad * speed * sphere_area(exterior, r) / (4.0 * kPi);
}

}  // namespace capaflat
