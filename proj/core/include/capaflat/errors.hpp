#ifndef CAPAFLAT_ERRORS_HPP_
#define CAPAFLAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace capaflat {

// Thrown when an iterative scheme (adaptive quadrature, Newton, Richardson
// extrapolation) fails to reach its tolerance.  Carries the best estimate
// produced so far so callers can report diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_estimate,
                   double achieved_error)
      : std::runtime_error(what),
        estimate(achieved_estimate),
        error(achieved_error) {}

  double estimate;  // best value reached before giving up
  double error;     // error estimate attached to it
};

// Thrown when the capacity of a metric is zero or undefined, e.g. when the
// radial integral of a/b^2 out to infinity diverges (b bounded).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace capaflat

#endif  // CAPAFLAT_ERRORS_HPP_
