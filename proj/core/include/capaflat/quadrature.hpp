#ifndef CAPAFLAT_QUADRATURE_HPP_
#define CAPAFLAT_QUADRATURE_HPP_

// Thin RAII wrapper around GSL adaptive quadrature (QAG, 61-point
// Gauss-Kronrod) with absolute-tolerance semantics.  Improper integrals
// over [lo, infinity) are mapped to the finite interval (0, 1/lo] by the
// substitution s = 1/r before integrating, which keeps asymptotically flat
// integrands smooth at s = 0.

#include <cstddef>
#include <functional>

#include "capaflat/errors.hpp"

namespace capaflat::quad {

inline constexpr double kDefaultTol = 1e-12;

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
};

// Integrate f over the finite interval [lo, hi] to absolute tolerance
// abs_tol.  Throws ConvergenceError when the estimate cannot be trusted.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = kDefaultTol);

// Integrate f over [lo, infinity), lo > 0, via s = 1/r.
Result integrate_to_infinity(const std::function<double(double)>& f,
                             double lo, double abs_tol = kDefaultTol);

}  // namespace capaflat::quad

#endif  // CAPAFLAT_QUADRATURE_HPP_
