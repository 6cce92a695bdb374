#ifndef CAPAFLAT_VERIFY_HPP_
#define CAPAFLAT_VERIFY_HPP_

// Verification suites: each suite exercises one family of identities from
// the library (closed-form example residuals, gradient consistency, flow
// variation, trace identities, capacity bounds, collar decay) and reports
// one row per check.  The CLI `verify` command is a thin wrapper over
// these functions.

#include <cstdint>
#include <string>
#include <vector>

namespace capaflat {

struct CheckRow {
  std::string suite;
  std::string name;
  double value = 0.0;     // measured quantity (usually a residual)
  double expected = 0.0;  // target value
  double tolerance = 0.0; // |value - expected| must not exceed this
  bool pass = false;
};

struct VerifyOptions {
  int trials = 12;                  // seeded perturbations per background
  std::uint64_t seed = 20240814;    // RNG seed for perturbation draws
  double fd_delta = 1e-3;           // finite-difference step
  double quadrature_tol = 1e-12;    // absolute quadrature tolerance
  double residual_tol = 1e-10;      // sup-norm tolerance for golden suites
  int jobs = 1;                     // worker threads for sweeps
};

std::vector<CheckRow> verify_examples(const VerifyOptions& opt);
std::vector<CheckRow> verify_gradient(const VerifyOptions& opt);
std::vector<CheckRow> verify_flow(const VerifyOptions& opt);
std::vector<CheckRow> verify_trace(const VerifyOptions& opt);
std::vector<CheckRow> verify_bounds(const VerifyOptions& opt);
std::vector<CheckRow> verify_collar(const VerifyOptions& opt);
std::vector<CheckRow> verify_all(const VerifyOptions& opt);

// Dispatch by suite name ("examples", "gradient", "flow", "trace",
// "bounds", "collar", "all"); unknown names raise std::invalid_argument.
std::vector<CheckRow> run_suite(const std::string& name,
                                const VerifyOptions& opt);

bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace capaflat

#endif  // CAPAFLAT_VERIFY_HPP_
