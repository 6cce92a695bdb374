#include "capaflat/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace capaflat::quad {

namespace {

// GSL aborts on error by default; switch to status codes once, before any
// integration can run.
const int kHandlerInit = [] {
  gsl_set_error_handler_off();
  return 0;
}();

double trampoline(double x, void* params) {
  const auto* fn = static_cast<const std::function<double(double)>*>(params);
  return (*fn)(x);
}

struct WorkspaceFree {
  void operator()(gsl_integration_workspace* w) const {
    gsl_integration_workspace_free(w);
  }
};

constexpr std::size_t kSubdivisionLimit = 4096;

}  // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
  (void)kHandlerInit;
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
  if (!(std::isfinite(lo) && std::isfinite(hi)) || lo > hi) {
    throw std::invalid_argument("quadrature interval must be finite ordered");
  }
  if (lo == hi) return Result{0.0, 0.0};

  std::unique_ptr<gsl_integration_workspace, WorkspaceFree> ws(
      gsl_integration_workspace_alloc(kSubdivisionLimit));
  if (!ws) throw std::bad_alloc();

  gsl_function F;
  F.function = &trampoline;
  F.params = const_cast<std::function<double(double)>*>(&f);

  double value = 0.0;
  double abserr = 0.0;
  const int status =
      gsl_integration_qag(&F, lo, hi, abs_tol, 0.0, kSubdivisionLimit,
                          GSL_INTEG_GAUSS61, ws.get(), &value, &abserr);

  if (!std::isfinite(value)) {
    throw ConvergenceError("quadrature produced a non-finite value", value,
                           abserr);
  }
  if (status != GSL_SUCCESS && abserr > abs_tol) {
    throw ConvergenceError(
        std::string("quadrature failed to reach tolerance: ") +
            gsl_strerror(status),
        value, abserr);
  }
  return Result{value, abserr};
}

Result integrate_to_infinity(const std::function<double(double)>& f,
                             double lo, double abs_tol) {
  if (!(lo > 0.0) || !std::isfinite(lo)) {
    throw std::invalid_argument(
        "improper quadrature requires a finite lower bound > 0");
  }
  // s = 1/r maps [lo, inf) to (0, 1/lo]; Gauss-Kronrod nodes are interior,
  // so the integrand is never evaluated at s = 0.
  auto mapped = [&f](double s) {
    const double r = 1.0 / s;
    return f(r) * r * r;
  };
  return integrate(mapped, 0.0, 1.0 / lo, abs_tol);
}

}  // namespace capaflat::quad
