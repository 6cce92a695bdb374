// capaflat: capacity and harmonic-static verification on radial
// asymptotically flat 3-manifolds.  This binary only translates flags into
// a RunConfig; all behavior lives in the library so it can be tested
// directly.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "capaflat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Capacity, capacity bounds and harmonic-static identities on radial "
      "asymptotically flat 3-manifolds"};
  app.require_subcommand(1);

  capaflat::RunConfig config;
  std::string config_path;
  std::string format = "csv";

  // Metric selection (shared by every subcommand via fallthrough).
  app.add_option("--config", config_path,
                 "JSON file with the metric spec (family, spec, m, r0, r1, "
                 "coeffs); explicit flags override file values");
  auto* family_opt =
      app.add_option("--family", config.metric.family,
                     "Metric family: warped | conformal (custom specs)");
  auto* spec_opt = app.add_option(
      "--spec", config.metric.spec,
      "Metric: flat | schwarzschild | sphere | custom");
  auto* m_opt = app.add_option("--m", config.metric.m, "Schwarzschild mass");
  auto* r0_opt =
      app.add_option("--r0", config.metric.r0, "Inner boundary radius");
  auto* r1_opt = app.add_option(
      "--r1", config.metric.r1, "Outer radius (inf for asymptotically flat)");
  auto* coeffs_opt = app.add_option(
      "--coeffs", config.metric.coeffs,
      "Custom profile coefficients, a series in inverse powers of r");

  app.add_option("--quadrature-tol", config.quadrature_tol,
                 "Absolute quadrature tolerance (env CAPAFLAT_TOL overrides)");
  app.add_option("--residual-tol", config.residual_tol,
                 "Sup-norm tolerance for golden residual checks");
  app.add_option("--fd-delta", config.fd_delta, "Finite-difference step");
  app.add_option("--seed", config.seed, "Seed for perturbation draws");
  app.add_option("--trials", config.trials,
                 "Seeded perturbation trials per background");
  app.add_option("--jobs", config.jobs, "Worker threads for sweeps");
  app.add_option("--output", config.output_path,
                 "Output file (default: stdout)");
  app.add_option("--format", format, "Output format: csv | json-lines")
      ->check(CLI::IsMember({"csv", "json-lines"}));

  auto* capacity = app.add_subcommand(
      "capacity", "Capacity of one metric by quadrature, flux and energy");

  auto* bounds = app.add_subcommand(
      "bounds", "Bartnik-data bounds sweep over (m, r0) pairs");
  bounds->add_option("--m-values", config.m_values, "Masses to sweep");
  bounds->add_option("--r0-values", config.r0_values, "Radii to sweep");

  auto* constructions = app.add_subcommand(
      "constructions", "Capacity-deformation sweeps");
  constructions->add_option(
      "--construction", config.construction,
      "blowup | strict-h | bump | collar");
  constructions->add_option("--c-values", config.c_values,
                            "Conformal factors (blowup, strict-h)");
  constructions->add_option("--t-values", config.t_values,
                            "Deformation sizes (bump)");
  constructions->add_option("--A-values", config.A_values,
                            "Collar aspect parameters");
  constructions->add_option("--eps", config.eps, "Collar profile parameter");
  constructions->add_option("--area", config.area, "Boundary area");
  constructions->add_option("--amplitude", config.amplitude,
                            "Bump amplitude");

  auto* solve_hs = app.add_subcommand(
      "solve-hs", "Integrate the harmonic-static ODE system");
  solve_hs->add_option("--r-start", config.r_start, "Integration start");
  solve_hs->add_option("--r-end", config.r_end, "Integration end");
  solve_hs->add_option("--u0", config.u0, "Initial value u(r_start)");
  solve_hs->add_option("--du0", config.du0, "Initial derivative u'(r_start)");
  solve_hs->add_option("--step", config.step, "Integrator step size");
  solve_hs->add_option("--samples", config.samples, "Output sample count");
  solve_hs->add_option(
      "--example", config.hs_example,
      "flat | schwarzschild | sphere: seed u0/du0 from the closed form");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option(
      "suite", config.suite,
      "examples | gradient | flow | trace | bounds | collar | all");

  for (auto* sub : {capacity, bounds, constructions, solve_hs, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (!config_path.empty()) {
    capaflat::MetricSpec from_file;
    try {
      from_file = capaflat::metric_spec_from_json_file(config_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    // Explicit flags win over file values.
    if (family_opt->count() == 0) config.metric.family = from_file.family;
    if (spec_opt->count() == 0) config.metric.spec = from_file.spec;
    if (m_opt->count() == 0) config.metric.m = from_file.m;
    if (r0_opt->count() == 0) config.metric.r0 = from_file.r0;
    if (r1_opt->count() == 0) config.metric.r1 = from_file.r1;
    if (coeffs_opt->count() == 0) config.metric.coeffs = from_file.coeffs;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "csv" ? capaflat::OutputFormat::Csv
                                  : capaflat::OutputFormat::JsonLines;
  return capaflat::run(config);
}
