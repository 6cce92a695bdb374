#include "capaflat/radial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace capaflat {

namespace {

constexpr double kPi = std::numbers::pi;

// Sample grid used to certify positivity of metric coefficients at
// construction.  Finite intervals are sampled uniformly; infinite ones at
// geometrically growing offsets from the inner boundary up to ~1e6 * scale.
std::vector<double> certificate_points(double r0, double r1) {
  std::vector<double> pts;
  if (std::isfinite(r1)) {
    constexpr int n = 97;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
      pts.push_back(r0 + (r1 - r0) * static_cast<double>(i) / (n - 1));
    }
  } else {
    const double scale = std::max(1.0, std::abs(r0));
    pts.push_back(r0);
    for (int k = 0; k <= 80; ++k) {
      pts.push_back(r0 + scale * std::pow(10.0, -2.0 + 0.1 * k));
    }
  }
  return pts;
}

void require_positive(const RadialFunction& fn, double r0, double r1,
                      const char* what) {
  for (double r : certificate_points(r0, r1)) {
    const double v = fn.value(r);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) +
                                  " must be positive on [r0, r1]; found " +
                                  std::to_string(v) + " at r = " +
                                  std::to_string(r));
    }
  }
}

void require_interval(double r0, double r1) {
  if (!std::isfinite(r0)) {
    throw std::invalid_argument("inner radius must be finite");
  }
  if (std::isnan(r1) || !(r0 < r1)) {
    throw std::invalid_argument("radial interval requires r0 < r1");
  }
}

}  // namespace

RadialFunction constant_function(double c) {
  return RadialFunction{
      [c](double) { return c; },
      [](double) { return 0.0; },
      [](double) { return 0.0; },
  };
}

RadialFunction coordinate_function() {
  return RadialFunction{
      [](double r) { return r; },
      [](double) { return 1.0; },
      [](double) { return 0.0; },
  };
}

RadialFunction inverse_power_series(std::vector<double> coeffs,
                                    int lead_power) {
  if (coeffs.empty()) {
    throw std::invalid_argument("inverse power series needs coefficients");
  }
  auto eval = [coeffs, lead_power](double r, int d) {
    double sum = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const int p = lead_power - static_cast<int>(k);
      double term = coeffs[k];
      int q = p;
      for (int j = 0; j < d; ++j) term *= q--;
      if (term != 0.0) term *= std::pow(r, p - d);
      sum += term;
    }
    return sum;
  };
  return RadialFunction{
      [eval](double r) { return eval(r, 0); },
      [eval](double r) { return eval(r, 1); },
      [eval](double r) { return eval(r, 2); },
  };
}

RadialFunction finite_difference_fallback(std::function<double(double)> f) {
  auto step = [](double r) { return std::max(1e-6, 1e-6 * std::abs(r)); };
  return RadialFunction{
      f,
      [f, step](double r) {
        const double h = step(r);
        return (f(r + h) - f(r - h)) / (2.0 * h);
      },
      [f, step](double r) {
        const double h = step(r);
        return (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h);
      },
  };
}

RadialMetric::RadialMetric() { *this = flat(1.0); }

RadialMetric RadialMetric::warped_product(RadialFunction f, double r0,
                                          double r1) {
  require_interval(r0, r1);
  require_positive(f, r0, r1, "warped profile f");
  RadialMetric g{Unset{}};
  g.family_ = MetricFamily::WarpedProduct;
  g.a_ = constant_function(1.0);
  g.b_ = f;
  g.profile_ = std::move(f);
  g.r0_ = r0;
  g.r1_ = r1;
  return g;
}

RadialMetric RadialMetric::conformally_flat(RadialFunction w, double r0,
                                            double r1) {
  require_interval(r0, r1);
  if (!(r0 > 0.0)) {
    throw std::invalid_argument(
        "conformally flat metrics require r0 > 0 (b = r w^2)");
  }
  require_positive(w, r0, r1, "conformal factor w");
  RadialMetric g{Unset{}};
  g.family_ = MetricFamily::ConformallyFlat;
  g.a_ = RadialFunction{
      [w](double r) {
        const double wr = w.value(r);
        return wr * wr;
      },
      [w](double r) { return 2.0 * w.value(r) * w.deriv(r); },
      [w](double r) {
        const double wp = w.deriv(r);
        return 2.0 * (wp * wp + w.value(r) * w.second(r));
      },
  };
  g.b_ = RadialFunction{
      [w](double r) {
        const double wr = w.value(r);
        return r * wr * wr;
      },
      [w](double r) {
        const double wr = w.value(r);
        return wr * wr + 2.0 * r * wr * w.deriv(r);
      },
      [w](double r) {
        const double wr = w.value(r);
        const double wp = w.deriv(r);
        return 4.0 * wr * wp + 2.0 * r * (wp * wp + wr * w.second(r));
      },
  };
  g.profile_ = std::move(w);
  g.r0_ = r0;
  g.r1_ = r1;
  return g;
}

RadialMetric RadialMetric::general_radial(RadialFunction a, RadialFunction b,
                                          double r0, double r1) {
  require_interval(r0, r1);
  require_positive(a, r0, r1, "coefficient a");
  require_positive(b, r0, r1, "coefficient b");
  RadialMetric g{Unset{}};
  g.family_ = MetricFamily::GeneralRadial;
  g.a_ = std::move(a);
  g.b_ = std::move(b);
  g.r0_ = r0;
  g.r1_ = r1;
  return g;
}

RadialMetric RadialMetric::flat(double r0, double r1) {
  return warped_product(coordinate_function(), r0, r1);
}

RadialMetric RadialMetric::schwarzschild(SchwarzschildParams params,
                                         double r1) {
  const double m = params.m;
  if (!(params.r0 > 0.0)) {
    throw std::invalid_argument("schwarzschild requires r0 > 0");
  }
  if (m > 0.0 && params.r0 < 0.5 * m) {
    throw std::invalid_argument(
        "schwarzschild requires r0 >= m/2 (boundary outside the horizon)");
  }
  if (m < 0.0 && !(params.r0 > -0.5 * m)) {
    throw std::invalid_argument(
        "schwarzschild with m < 0 requires r0 > -m/2 (w > 0)");
  }
  RadialFunction w{
      [m](double r) { return 1.0 + 0.5 * m / r; },
      [m](double r) { return -0.5 * m / (r * r); },
      [m](double r) { return m / (r * r * r); },
  };
  RadialMetric g = conformally_flat(std::move(w), params.r0, r1);
  g.has_schwarzschild_params_ = true;
  g.schwarzschild_params_ = params;
  return g;
}

RadialMetric RadialMetric::sphere_band(double r0, double r1) {
  if (!(r0 > -0.5 * kPi && r1 < 0.5 * kPi)) {
    throw std::invalid_argument(
        "sphere band requires [r0, r1] inside (-pi/2, pi/2)");
  }
  RadialFunction f{
      [](double r) { return std::cos(r); },
      [](double r) { return -std::sin(r); },
      [](double r) { return -std::cos(r); },
  };
  return warped_product(std::move(f), r0, r1);
}

const RadialFunction& RadialMetric::profile() const {
  if (family_ == MetricFamily::GeneralRadial) {
    throw std::invalid_argument(
        "unsupported family: GeneralRadial metrics carry no profile");
  }
  return profile_;
}

const SchwarzschildParams& RadialMetric::schwarzschild_params() const {
  if (!has_schwarzschild_params_) {
    throw std::invalid_argument("metric was not built by schwarzschild()");
  }
  return schwarzschild_params_;
}

RadialMetric RadialMetric::with_inner_radius(double new_r0) const {
  if (!(new_r0 >= r0_ && new_r0 < r1_)) {
    throw std::invalid_argument("new inner radius must lie in [r0, r1)");
  }
  RadialMetric g = *this;
  g.r0_ = new_r0;
  if (g.has_schwarzschild_params_) g.schwarzschild_params_.r0 = new_r0;
  return g;
}

RadialTensor metric_tensor(const RadialMetric& g, double r) {
  const double a = g.a(r);
  const double b = g.b(r);
  return RadialTensor{a * a, b * b};
}

double tensor_trace(const RadialTensor& T, const RadialMetric& g, double r) {
  const double a = g.a(r);
  const double b = g.b(r);
  return T.rr / (a * a) + 2.0 * T.ang / (b * b);
}

double tensor_pairing(const RadialTensor& S, const RadialTensor& T,
                      const RadialMetric& g, double r) {
  const double a2 = g.a(r) * g.a(r);
  const double b2 = g.b(r) * g.b(r);
  return S.rr * T.rr / (a2 * a2) + 2.0 * S.ang * T.ang / (b2 * b2);
}

double sphere_area(const RadialMetric& g, double r) {
  const double b = g.b(r);
  return 4.0 * kPi * b * b;
}

double mean_curvature_sphere(const RadialMetric& g, double r) {
  return 2.0 * g.db(r) / (g.a(r) * g.b(r));
}

}  // namespace capaflat
