#include "capaflat/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "capaflat/potential.hpp"

namespace capaflat {

namespace {

constexpr double kPi = std::numbers::pi;

// gbar = u^4 g as a GeneralRadial metric, for u given with two analytic
// derivatives: (a, b) -> (u^2 a, u^2 b).
RadialMetric fourth_power_conformal(const RadialMetric& g,
                                    const RadialFunction& u) {
  auto scaled = [u](const auto value, const auto deriv, const auto second) {
    RadialFunction out;
    out.value = [u, value](double r) {
      const double uv = u.value(r);
      return uv * uv * value(r);
    };
    out.deriv = [u, value, deriv](double r) {
      const double uv = u.value(r);
      return 2.0 * uv * u.deriv(r) * value(r) + uv * uv * deriv(r);
    };
    out.second = [u, value, deriv, second](double r) {
      const double uv = u.value(r);
      const double up = u.deriv(r);
      return 2.0 * (up * up + uv * u.second(r)) * value(r) +
             4.0 * uv * up * deriv(r) + uv * uv * second(r);
    };
    return out;
  };
  RadialFunction a{[g](double r) { return g.a(r); },
                   [g](double r) { return g.da(r); },
                   [g](double r) { return g.d2a(r); }};
  RadialFunction b{[g](double r) { return g.b(r); },
                   [g](double r) { return g.db(r); },
                   [g](double r) { return g.d2b(r); }};
  return RadialMetric::general_radial(
      scaled(a.value, a.deriv, a.second), scaled(b.value, b.deriv, b.second),
      g.inner_radius(), g.outer_radius());
}

}  // namespace

ConformalBlowupResult conformal_blowup(const RadialMetric& g, double c,
                                       double quadrature_tol) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("conformal blow-up requires c > 0");
  }
  const CapacitaryPotential p = capacitary_potential(g, quadrature_tol);

  // u_c = 1 + (c-1) phi; phi'' = cap (a'/b^2 - 2 a b'/b^3) analytically.
  const double c1 = c - 1.0;
  auto phi = p.phi;
  auto dphi = p.dphi;
  const RadialMetric base = g;
  const double cap = p.cap;
  RadialFunction uc{
      [phi, c1](double r) { return 1.0 + c1 * phi(r); },
      [dphi, c1](double r) { return c1 * dphi(r); },
      [base, cap, c1](double r) {
        const double b = base.b(r);
        return c1 * cap *
               (base.da(r) / (b * b) -
                2.0 * base.a(r) * base.db(r) / (b * b * b));
      },
  };

  ConformalBlowupResult out;
  out.deformed = fourth_power_conformal(g, uc);
  out.cap_before = p.cap;
  out.cap_after = capacity_quadrature(out.deformed, quadrature_tol);
  out.ratio = out.cap_after / out.cap_before;
  return out;
}

StrictHDeformationResult strict_H_deformation(const RadialMetric& g, double c,
                                              double quadrature_tol) {
  if (!(c > 1.0)) {
    throw std::invalid_argument("strict H deformation requires c > 1");
  }
  const ConformalBlowupResult blowup =
      conformal_blowup(g, c, quadrature_tol);
  const double r0 = g.inner_radius();
  const double b0 = g.b(r0);

  StrictHDeformationResult out;
  out.boundary_H_before = mean_curvature_sphere(g, r0);
  // dphi/dnu(r0) = cap / b^2; the boundary metric is unchanged while the
  // mean curvature gains 4 (c-1) dphi/dnu.
  out.boundary_H_after =
      out.boundary_H_before + 4.0 * (c - 1.0) * blowup.cap_before / (b0 * b0);
  out.cap_before = blowup.cap_before;
  out.cap_after = blowup.cap_after;
  return out;
}

BumpDeformationResult zsc_bump_deformation(const RadialMetric& g,
                                           const RadialFunction& rho,
                                           double support_lo,
                                           double support_hi, double t,
                                           double quadrature_tol) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("bump deformation requires t > 0");
  }
  if (!(g.inner_radius() < support_lo && support_lo < support_hi &&
        support_hi < g.outer_radius()) ||
      !std::isfinite(support_hi)) {
    throw std::invalid_argument(
        "bump support must satisfy r0 < lo < hi < r1 with hi finite");
  }
  double rho_max = 0.0;
  for (int i = 0; i <= 64; ++i) {
    const double r =
        support_lo + (support_hi - support_lo) * static_cast<double>(i) / 64;
    const double v = rho.value(r);
    if (v < 0.0) {
      throw std::invalid_argument("bump profile must be nonnegative");
    }
    rho_max = std::max(rho_max, v);
  }
  if (!(rho_max > 0.0)) {
    throw std::invalid_argument("bump profile must not vanish identically");
  }

  const double cap = capacity_quadrature(g, quadrature_tol);

  // cap_t = 1 / int a / ((1 + t rho)^2 b^2); rho vanishes off its support,
  // so the deformed weight equals the background one there.
  auto weight = [g, rho, t, support_lo, support_hi](double r) {
    const double b = g.b(r);
    double s = 1.0;
    if (r > support_lo && r < support_hi) {
      s = 1.0 + t * rho.value(r);
      s = s * s;
    }
    return g.a(r) / (s * b * b);
  };
  const double I =
      quad::integrate_to_infinity(weight, g.inner_radius(), quadrature_tol)
          .value;

  // First-order response: pairing of S_phi with d/dt (1+t rho)^4 g|_0
  // = 4 rho g, i.e. 2 cap^2 int rho a/b^2 dr.
  auto pairing_integrand = [g, rho](double r) {
    const double b = g.b(r);
    return rho.value(r) * g.a(r) / (b * b);
  };
  const double pairing_integral =
      quad::integrate(pairing_integrand, support_lo, support_hi,
                      quadrature_tol)
          .value;

  BumpDeformationResult out;
  out.cap_before = cap;
  out.cap_after = 1.0 / I;
  out.first_order = 2.0 * cap * cap * pairing_integral;
  return out;
}

double collar_capacity_bound(const CollarParams& params) {
  if (!(params.A > 0.0) || !(params.eps >= 0.0) || !(params.area > 0.0)) {
    throw std::invalid_argument(
        "collar bound requires A > 0, eps >= 0, area > 0");
  }
  return params.area / (kPi * params.A) * (0.5 + params.eps / 24.0);
}

}  // namespace capaflat
