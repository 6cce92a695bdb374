#ifndef CAPAFLAT_CLI_HPP_
#define CAPAFLAT_CLI_HPP_

// Command dispatch shared by the capaflat executable and the tests.
// The binary in tools/ only parses flags into a RunConfig and calls run().
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.
// The environment variable CAPAFLAT_TOL, when set, overrides the
// quadrature tolerance regardless of flags.

#include <cstdint>
#include <string>
#include <vector>

#include "capaflat/radial.hpp"
#include "capaflat/report.hpp"

namespace capaflat {

// Metric selection as it appears in config files and flags:
//   family: "warped" | "conformal"
//   spec:   "flat" | "schwarzschild" | "sphere" | "custom"
//   coeffs: custom profiles as a series in inverse powers of r
//           (f = sum c_k r^(1-k) for warped, w = sum c_k r^(-k) for
//           conformal).
struct MetricSpec {
  std::string family = "conformal";
  std::string spec = "flat";
  double m = 0.0;
  double r0 = 1.0;
  double r1 = kInfiniteRadius;  // "inf" in config files
  std::vector<double> coeffs;
};

RadialMetric build_metric(const MetricSpec& spec);

// Parse a JSON config file ({"family": ..., "spec": ..., "m": ..., "r0":
// ..., "r1": number|"inf", "coeffs": [...]}).  Unknown keys are rejected.
MetricSpec metric_spec_from_json_file(const std::string& path);

struct RunConfig {
  std::string command;       // capacity | bounds | constructions | solve-hs | verify
  std::string suite = "all"; // verify suite name
  MetricSpec metric;

  double quadrature_tol = 1e-12;
  double residual_tol = 1e-10;
  double fd_delta = 1e-3;

  // Sweeps.
  std::vector<double> m_values = {-1.0, 0.0, 1.0, 2.0};
  std::vector<double> r0_values = {1.0};
  std::vector<double> c_values = {0.25, 3.0, 10.0};
  std::vector<double> t_values = {0.01, 0.05};
  std::vector<double> A_values = {10.0, 100.0, 1000.0, 10000.0};
  std::string construction = "blowup";  // blowup | strict-h | bump | collar
  double eps = 0.1;
  double area = 4.0 * 3.14159265358979323846;
  double amplitude = 0.05;

  // solve-hs.
  double r_start = 2.0;
  double r_end = 50.0;
  double u0 = 0.0;
  double du0 = 0.0;
  double step = 1e-2;
  int samples = 25;
  std::string hs_example;  // optional: flat|schwarzschild|sphere seeds u0/du0

  std::uint64_t seed = 20240814;
  int trials = 12;
  int jobs = 1;

  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
};

int run(const RunConfig& config);

}  // namespace capaflat

#endif  // CAPAFLAT_CLI_HPP_
