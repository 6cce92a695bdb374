#include "capaflat/curvature.hpp"

#include <stdexcept>

namespace capaflat {

CurvatureResult curvature_warped(const RadialFunction& f, double r) {
  const double fr = f.value(r);
  const double fp = f.deriv(r);
  const double fpp = f.second(r);
  RadialTensor ric;
  ric.rr = -2.0 * fpp / fr;
  ric.ang = 1.0 - fp * fp - fr * fpp;
  // trace with a = 1, b = f
  const double scalar = ric.rr + 2.0 * ric.ang / (fr * fr);
  return CurvatureResult{ric, scalar};
}

CurvatureResult curvature_conformal(const RadialFunction& w, double r) {
  const double wr = w.value(r);
  const double wp = w.deriv(r);
  const double wpp = w.second(r);
  RadialTensor ric;
  ric.rr = -(4.0 * wpp / wr + 4.0 * wp / (r * wr) - 4.0 * wp * wp / (wr * wr));
  ric.ang = -(2.0 * wpp / wr + 6.0 * wp / (r * wr) +
              2.0 * wp * wp / (wr * wr)) *
            r * r;
  // trace with a = w^2, b = r w^2
  const double a2 = wr * wr * wr * wr;
  const double b2 = r * r * a2;
  const double scalar = ric.rr / a2 + 2.0 * ric.ang / b2;
  return CurvatureResult{ric, scalar};
}

CurvatureResult curvature(const RadialMetric& g, double r) {
  switch (g.family()) {
    case MetricFamily::WarpedProduct:
      return curvature_warped(g.profile(), r);
    case MetricFamily::ConformallyFlat:
      return curvature_conformal(g.profile(), r);
    case MetricFamily::GeneralRadial:
      break;
  }
  throw std::invalid_argument(
      "unsupported family: curvature needs a warped or conformally flat "
      "metric");
}

double scalar_curvature(const RadialMetric& g, double r) {
  return curvature(g, r).scalar;
}

}  // namespace capaflat
