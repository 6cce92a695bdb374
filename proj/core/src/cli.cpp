#include "capaflat/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "capaflat/bounds.hpp"
#include "capaflat/constructions.hpp"
#include "capaflat/errors.hpp"
#include "capaflat/harmonic_static.hpp"
#include "capaflat/potential.hpp"
#include "capaflat/variation.hpp"
#include "capaflat/verify.hpp"

namespace capaflat {

namespace {

constexpr const char* kUsage =
    "usage: capaflat <command> [flags]\n"
    "commands:\n"
    "  capacity       capacity of one metric by quadrature, flux and energy\n"
    "  bounds         Bartnik-data bounds sweep over (m, r0)\n"
    "  constructions  blowup | strict-h | bump | collar sweeps\n"
    "  solve-hs       integrate the harmonic-static ODE system\n"
    "  verify         run a check suite: examples | gradient | flow | trace\n"
    "                 | bounds | collar | all\n";

void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t wid = 0; wid < workers; ++wid) {
    pool.emplace_back([wid, workers, n, &fn] {
      for (std::size_t i = wid; i < n; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

double env_quadrature_tol(double flag_value) {
  const char* raw = std::getenv("CAPAFLAT_TOL");
  if (raw == nullptr || *raw == '\0') return flag_value;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(
        std::string("CAPAFLAT_TOL must be a positive number, got \"") + raw +
        "\"");
  }
  return v;
}

struct CommandResult {
  std::vector<Row> rows;
  bool pass = true;
};

CommandResult run_capacity(const RunConfig& cfg, double tol) {
  const RadialMetric g = build_metric(cfg.metric);
  const CapacitaryPotential potential = capacitary_potential(g, tol);
  const double routes[3] = {
      potential.cap,
      capacity_flux(potential),
      capacity_energy(potential, tol),
  };
  const char* names[3] = {"quadrature", "flux", "energy"};

  CommandResult out;
  const double agree_tol = 1e-9 * std::max(1.0, std::abs(routes[0]));
  for (int i = 0; i < 3; ++i) {
    const double residual = std::abs(routes[i] - routes[0]);
    const bool ok = residual <= agree_tol;
    out.pass = out.pass && ok;
    out.rows.push_back(Row{}
                           .text("route", names[i])
                           .number("capacity", routes[i])
                           .number("residual", residual)
                           .flag("pass", ok));
  }
  return out;
}

CommandResult run_bounds(const RunConfig& cfg, double tol) {
  struct Item {
    double m, r0;
  };
  std::vector<Item> items;
  for (double m : cfg.m_values)
    for (double r0 : cfg.r0_values) items.push_back({m, r0});

  CommandResult out;
  out.rows.resize(items.size());
  std::vector<char> ok(items.size(), 1);
  parallel_for(items.size(), cfg.jobs, [&](std::size_t i) {
    const SchwarzschildParams p{items[i].m, items[i].r0};
    const RadialMetric g = RadialMetric::schwarzschild(p);
    const double cap = capacity_quadrature(g, tol);
    const BartnikDataRound data = schwarzschild_bartnik_data(p);
    const double bm = bray_miao_bound(data);
    const double mc = max_capacity_round(data);
    const double residual =
        std::max(std::abs(bm - cap), std::abs(mc - cap));
    const bool row_ok = residual <= 1e-9 * std::max(1.0, std::abs(cap));
    ok[i] = row_ok ? 1 : 0;
    out.rows[i] = Row{}
                      .number("m", p.m)
                      .number("r0", p.r0)
                      .number("area", data.area)
                      .number("H", data.H)
                      .number("cap", cap)
                      .number("bray_miao", bm)
                      .number("max_cap_round", mc)
                      .number("residual", residual)
                      .flag("pass", row_ok);
  });
  for (char c : ok) out.pass = out.pass && c != 0;
  return out;
}

CommandResult run_constructions(const RunConfig& cfg, double tol) {
  CommandResult out;
  if (cfg.construction == "blowup") {
    const RadialMetric g = build_metric(cfg.metric);
    for (double c : cfg.c_values) {
      const ConformalBlowupResult res = conformal_blowup(g, c, tol);
      const double residual = std::abs(res.ratio - c);
      const bool ok = residual <= 1e-9 * std::max(1.0, c);
      out.pass = out.pass && ok;
      out.rows.push_back(Row{}
                             .text("construction", "blowup")
                             .number("c", c)
                             .number("cap_before", res.cap_before)
                             .number("cap_after", res.cap_after)
                             .number("ratio", res.ratio)
                             .number("residual", residual)
                             .flag("pass", ok));
    }
  } else if (cfg.construction == "strict-h") {
    const RadialMetric g = build_metric(cfg.metric);
    for (double c : cfg.c_values) {
      const StrictHDeformationResult res = strict_H_deformation(g, c, tol);
      const double margin = res.cap_after - res.cap_before;
      const bool ok = margin > 0.0;
      out.pass = out.pass && ok;
      out.rows.push_back(Row{}
                             .text("construction", "strict-h")
                             .number("c", c)
                             .number("H_before", res.boundary_H_before)
                             .number("H_after", res.boundary_H_after)
                             .number("cap_before", res.cap_before)
                             .number("cap_after", res.cap_after)
                             .number("margin", margin)
                             .flag("pass", ok));
    }
  } else if (cfg.construction == "bump") {
    const RadialMetric g = build_metric(cfg.metric);
    const double lo = g.inner_radius() + 0.5;
    const double hi = g.inner_radius() + 2.5;
    const RadialFunction rho = smooth_bump(lo, hi, cfg.amplitude);
    for (double t : cfg.t_values) {
      const BumpDeformationResult res =
          zsc_bump_deformation(g, rho, lo, hi, t, tol);
      const double margin = res.cap_after - res.cap_before;
      const bool ok = margin > 0.0;
      out.pass = out.pass && ok;
      out.rows.push_back(Row{}
                             .text("construction", "bump")
                             .number("t", t)
                             .number("cap_before", res.cap_before)
                             .number("cap_after", res.cap_after)
                             .number("first_order", res.first_order)
                             .number("margin", margin)
                             .flag("pass", ok));
    }
  } else if (cfg.construction == "collar") {
    for (double A : cfg.A_values) {
      const double bound = collar_capacity_bound({A, cfg.eps, cfg.area});
      out.rows.push_back(Row{}
                             .text("construction", "collar")
                             .number("A", A)
                             .number("eps", cfg.eps)
                             .number("area", cfg.area)
                             .number("bound", bound)
                             .flag("pass", true));
    }
  } else {
    throw std::invalid_argument("unknown construction: " + cfg.construction);
  }
  return out;
}

CommandResult run_solve_hs(const RunConfig& cfg, double tol) {
  CommandResult out;
  const std::vector<double> grid =
      linear_grid(cfg.r_start, cfg.r_end, std::max(2, cfg.samples));

  if (!cfg.hs_example.empty()) {
    HSExample id;
    if (cfg.hs_example == "flat") {
      id = HSExample::Flat;
    } else if (cfg.hs_example == "schwarzschild") {
      id = HSExample::Schwarzschild;
    } else if (cfg.hs_example == "sphere") {
      id = HSExample::Sphere;
    } else {
      throw std::invalid_argument("unknown hs example: " + cfg.hs_example);
    }
    const HSExampleProblem prob =
        example_problem(id, {cfg.metric.r0, cfg.metric.m, 0.0});
    const HSOdeSolution sol =
        solve_hs_ode(prob.metric, prob.phi, prob.u.u.value(cfg.r_start),
                     prob.u.u.deriv(cfg.r_start), grid, cfg.step);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double exact = prob.u.u.value(grid[i]);
      out.rows.push_back(Row{}
                             .number("r", grid[i])
                             .number("u", sol.u[i])
                             .number("du", sol.du[i])
                             .number("u_exact", exact)
                             .number("error", std::abs(sol.u[i] - exact))
                             .number("defect", sol.compatibility_defect));
    }
    return out;
  }

  const RadialMetric g = build_metric(cfg.metric);
  const CapacitaryPotential potential = capacitary_potential(g, tol);
  const HSOdeSolution sol = solve_hs_ode(
      g, harmonic_profile(potential), cfg.u0, cfg.du0, grid, cfg.step);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.rows.push_back(Row{}
                           .number("r", grid[i])
                           .number("u", sol.u[i])
                           .number("du", sol.du[i])
                           .number("defect", sol.compatibility_defect));
  }
  return out;
}

CommandResult run_verify(const RunConfig& cfg, double tol) {
  VerifyOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.fd_delta = cfg.fd_delta;
  opt.quadrature_tol = tol;
  opt.residual_tol = cfg.residual_tol;
  opt.jobs = cfg.jobs;

  const std::vector<CheckRow> checks = run_suite(cfg.suite, opt);
  CommandResult out;
  out.pass = all_pass(checks);
  for (const CheckRow& c : checks) {
    out.rows.push_back(Row{}
                           .text("suite", c.suite)
                           .text("name", c.name)
                           .number("value", c.value)
                           .number("expected", c.expected)
                           .number("tolerance", c.tolerance)
                           .flag("pass", c.pass));
  }
  return out;
}

}  // namespace

RadialMetric build_metric(const MetricSpec& spec) {
  if (spec.family != "warped" && spec.family != "conformal") {
    throw std::invalid_argument("unknown metric family: " + spec.family);
  }
  if (spec.spec == "flat") {
    return RadialMetric::flat(spec.r0, spec.r1);
  }
  if (spec.spec == "schwarzschild") {
    return RadialMetric::schwarzschild({spec.m, spec.r0}, spec.r1);
  }
  if (spec.spec == "sphere") {
    if (spec.r1 == kInfiniteRadius) {
      throw std::invalid_argument("sphere band requires a finite r1");
    }
    return RadialMetric::sphere_band(spec.r0, spec.r1);
  }
  if (spec.spec == "custom") {
    if (spec.coeffs.empty()) {
      throw std::invalid_argument("custom metric requires coeffs");
    }
    if (spec.family == "warped") {
      return RadialMetric::warped_product(
          inverse_power_series(spec.coeffs, 1), spec.r0, spec.r1);
    }
    return RadialMetric::conformally_flat(
        inverse_power_series(spec.coeffs, 0), spec.r0, spec.r1);
  }
  throw std::invalid_argument("unknown metric spec: " + spec.spec);
}

MetricSpec metric_spec_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("config root must be a JSON object");
  }

  MetricSpec spec;
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "family") {
        spec.family = value.get<std::string>();
      } else if (key == "spec") {
        spec.spec = value.get<std::string>();
      } else if (key == "m") {
        spec.m = value.get<double>();
      } else if (key == "r0") {
        spec.r0 = value.get<double>();
      } else if (key == "r1") {
        if (value.is_string()) {
          if (value.get<std::string>() != "inf") {
            throw std::invalid_argument(
                "r1 must be a number or the string \"inf\"");
          }
          spec.r1 = kInfiniteRadius;
        } else {
          spec.r1 = value.get<double>();
        }
      } else if (key == "coeffs") {
        spec.coeffs = value.get<std::vector<double>>();
      } else {
        throw std::invalid_argument("unknown config key: " + key);
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("config key \"" + key +
                                  "\": " + e.what());
    }
  }
  return spec;
}

int run(const RunConfig& config) {
  CommandResult result;
  try {
    const double tol = env_quadrature_tol(config.quadrature_tol);
    if (!(tol > 0.0) || !(config.residual_tol > 0.0) ||
        !(config.fd_delta > 0.0)) {
      throw std::invalid_argument("tolerances must be positive");
    }
    if (config.command == "capacity") {
      result = run_capacity(config, tol);
    } else if (config.command == "bounds") {
      result = run_bounds(config, tol);
    } else if (config.command == "constructions") {
      result = run_constructions(config, tol);
    } else if (config.command == "solve-hs") {
      result = run_solve_hs(config, tol);
    } else if (config.command == "verify") {
      result = run_verify(config, tol);
    } else {
      std::cerr << "unknown command: " << config.command << "\n" << kUsage;
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path);
    if (!out) {
      std::cerr << "error: cannot open output file: " << config.output_path
                << "\n";
      return 2;
    }
    emit_rows(result.rows, config.format, out);
    out.flush();
    if (!out) {
      std::cerr << "error: write failed: " << config.output_path << "\n";
      return 2;
    }
  } else {
    emit_rows(result.rows, config.format, std::cout);
  }
  return result.pass ? 0 : 1;
}

}  // namespace capaflat
