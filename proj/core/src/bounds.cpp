#include "capaflat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "capaflat/curvature.hpp"
#include "capaflat/errors.hpp"

namespace capaflat {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const BartnikDataRound& data) {
  if (!(data.area > 0.0) || !std::isfinite(data.area)) {
    throw std::invalid_argument("Bartnik data requires area > 0");
  }
  if (!(data.H >= 0.0) || !std::isfinite(data.H)) {
    throw std::invalid_argument("Bartnik data requires H >= 0");
  }
}

struct DataAndJacobian {
  double area = 0.0;
  double H = 0.0;
  // Partial derivatives of (area, H) with respect to (m, r0).
  double area_m = 0.0, area_r0 = 0.0;
  double H_m = 0.0, H_r0 = 0.0;
};

DataAndJacobian evaluate_dictionary(double m, double r0) {
  const double w = 1.0 + 0.5 * m / r0;
  const double numer = 1.0 - 0.5 * m / r0;
  DataAndJacobian out;
  out.area = 4.0 * kPi * r0 * r0 * w * w * w * w;
  out.H = 2.0 * numer / (r0 * w * w * w);
  out.area_m = 8.0 * kPi * r0 * w * w * w;
  out.area_r0 = 8.0 * kPi * w * w * w * (r0 * w - m);
  const double w4 = w * w * w * w;
  out.H_m = -(w + 3.0 * numer) / (r0 * r0 * w4);
  out.H_r0 = 2.0 * (0.5 * m / (r0 * r0 * r0) / (w * w * w) -
                    numer * (w - 1.5 * m / r0) / (r0 * r0 * w4));
  return out;
}

}  // namespace

double bray_miao_bound(const BartnikDataRound& data) {
  validate(data);
  const double rho = std::sqrt(data.area / (16.0 * kPi));
  const double willmore =
      std::sqrt(data.H * data.H * data.area / (16.0 * kPi));
  return rho * (1.0 + willmore);
}

double max_capacity_round(const BartnikDataRound& data) {
  validate(data);
  const double rho = std::sqrt(data.area / (16.0 * kPi));
  return rho * (1.0 + data.H * rho);
}

BartnikDataRound schwarzschild_bartnik_data(const SchwarzschildParams& p) {
  if (!(p.r0 > 0.0)) {
    throw std::invalid_argument("schwarzschild data requires r0 > 0");
  }
  const double w = 1.0 + 0.5 * p.m / p.r0;
  if (!(w > 0.0)) {
    throw std::invalid_argument("schwarzschild data requires 1 + m/2r0 > 0");
  }
  BartnikDataRound data;
  data.area = 4.0 * kPi * p.r0 * p.r0 * w * w * w * w;
  data.H = 2.0 * (1.0 - 0.5 * p.m / p.r0) / (p.r0 * w * w * w);
  return data;
}

SchwarzschildParams round_data_to_schwarzschild(const BartnikDataRound& data) {
  validate(data);
  const double rho = std::sqrt(data.area / (16.0 * kPi));

  // Dimensionless residuals: relative area defect and H defect scaled by
  // the length rho, so one max-norm covers both components.
  auto residual = [&data, rho](double m, double r0, double& f1, double& f2) {
    const DataAndJacobian d = evaluate_dictionary(m, r0);
    f1 = (d.area - data.area) / data.area;
    f2 = (d.H - data.H) * rho;
  };

  double m = 0.0;
  double r0 = std::sqrt(data.area / (4.0 * kPi));
  double f1, f2;
  residual(m, r0, f1, f2);
  double norm = std::max(std::abs(f1), std::abs(f2));

  constexpr double kTarget = 1e-13;
  for (int iter = 0; iter < 100 && norm > kTarget; ++iter) {
    const DataAndJacobian d = evaluate_dictionary(m, r0);
    const double j11 = d.area_m / data.area;
    const double j12 = d.area_r0 / data.area;
    const double j21 = d.H_m * rho;
    const double j22 = d.H_r0 * rho;
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) {
      throw ConvergenceError("singular Jacobian in round-data inversion", m,
                             norm);
    }
    const double dm = (-f1 * j22 + f2 * j12) / det;
    const double dr0 = (-j11 * f2 + j21 * f1) / det;

    // Damped update: halve until the iterate is evaluable and the residual
    // norm decreases.
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
      const double mt = m + lambda * dm;
      const double rt = r0 + lambda * dr0;
      if (!(rt > 0.0) || !(1.0 + 0.5 * mt / rt > 0.0)) continue;
      double g1, g2;
      residual(mt, rt, g1, g2);
      const double trial = std::max(std::abs(g1), std::abs(g2));
      if (trial < norm) {
        m = mt;
        r0 = rt;
        f1 = g1;
        f2 = g2;
        norm = trial;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw ConvergenceError("round-data inversion stalled", m, norm);
    }
  }
  if (norm > kTarget) {
    throw ConvergenceError("round-data inversion did not reach tolerance", m,
                           norm);
  }
  if (m > 0.0 && r0 < 0.5 * m - 1e-9 * std::max(1.0, m)) {
    throw ConvergenceError("round-data inversion left the exterior branch",
                           m, norm);
  }
  return SchwarzschildParams{m, r0};
}

AdmissibilityReport admissibility(const RadialMetric& g,
                                  const BartnikDataRound& data,
                                  std::span<const double> grid, double tol) {
  validate(data);
  const double r0 = g.inner_radius();
  AdmissibilityReport report;
  report.boundary_area = sphere_area(g, r0);
  if (std::abs(report.boundary_area - data.area) >
      1e-8 * std::max(1.0, data.area)) {
    throw std::invalid_argument(
        "boundary metric mismatch: sphere area differs from the data");
  }
  report.boundary_H = mean_curvature_sphere(g, r0);
  report.mean_curvature_ok = report.boundary_H <= data.H + tol;

  double min_scalar = std::numeric_limits<double>::infinity();
  for (double r : grid) {
    min_scalar = std::min(min_scalar, scalar_curvature(g, r));
  }
  report.min_scalar = min_scalar;
  report.scalar_ok = min_scalar >= -tol;
  report.admissible = report.mean_curvature_ok && report.scalar_ok;
  return report;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw std::invalid_argument("log grid requires 0 < lo < hi and n >= 2");
  }
  std::vector<double> out;
  out.reserve(n);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < n; ++i) {
    out.push_back(lo * std::exp(ratio * static_cast<double>(i) / (n - 1)));
  }
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (!(hi > lo) || n < 2) {
    throw std::invalid_argument("linear grid requires lo < hi and n >= 2");
  }
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
  }
  return out;
}

}  // namespace capaflat
