#include "capaflat/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "capaflat/bounds.hpp"
#include "capaflat/constructions.hpp"
#include "capaflat/curvature.hpp"
#include "capaflat/harmonic_static.hpp"
#include "capaflat/potential.hpp"
#include "capaflat/variation.hpp"

namespace capaflat {

namespace {

CheckRow make_check(std::string suite, std::string name, double value,
                    double expected, double tolerance) {
  CheckRow row;
  row.suite = std::move(suite);
  row.name = std::move(name);
  row.value = value;
  row.expected = expected;
  row.tolerance = tolerance;
  row.pass = std::abs(value - expected) <= tolerance;
  return row;
}

std::string name_fmt(const char* fmt, double x, double y) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, x, y);
  return buf;
}

// Uniform double in [0,1) drawn directly from the 64-bit engine so the
// sequence is fixed by the standard, not by the library's distribution.
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

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

HSPotential add_kernel(const HSPotential& u, const RadialFunction& k,
                       double amount) {
  HSPotential out = u;
  const RadialFunction base = u.u;
  out.u = RadialFunction{
      [base, k, amount](double r) {
        return base.value(r) + amount * k.value(r);
      },
      [base, k, amount](double r) {
        return base.deriv(r) + amount * k.deriv(r);
      },
      [base, k, amount](double r) {
        return base.second(r) + amount * k.second(r);
      },
  };
  out.kernel_coeff += amount;
  return out;
}

}  // namespace

std::vector<CheckRow> verify_examples(const VerifyOptions& opt) {
  std::vector<CheckRow> rows;
  const double tol = opt.residual_tol;

  // Example 1: flat exterior.
  for (double r0 : {1.0, 2.0}) {
    for (double C : {0.0, 1.0}) {
      const HSExampleProblem prob =
          example_problem(HSExample::Flat, {r0, 0.0, C});
      const auto grid = log_grid(r0, 100.0 * r0, 41);
      const HSResidual res = hs_residual(prob.metric, prob.phi, prob.u, grid);
      rows.push_back(make_check("examples",
                                name_fmt("ex1/r0=%g/C=%g", r0, C),
                                res.sup_norm, 0.0, tol));
    }
  }

  // Example 2: spatial Schwarzschild, r0 = 1.
  for (double m : {-1.0, 1.0, 2.0}) {
    for (double C : {0.0, 1.0, -3.0}) {
      const HSExampleProblem prob =
          example_problem(HSExample::Schwarzschild, {1.0, m, C});
      const auto grid = log_grid(1.0, 100.0, 41);
      const HSResidual res = hs_residual(prob.metric, prob.phi, prob.u, grid);
      rows.push_back(make_check("examples",
                                name_fmt("ex2/m=%g/C=%g", m, C),
                                res.sup_norm, 0.0, tol));
    }
  }

  // Example 3: Cartesian arithmetic; the honest pair cancels exactly.
  {
    const std::array<std::array<double, 3>, 3> pts = {
        {{1.0, 2.0, 2.0}, {0.3, -1.0, 2.0}, {5.0, 5.0, 5.0}}};
    rows.push_back(make_check(
        "examples", "ex3/full",
        cartesian_example3_check(pts, Example3Variant::Full), 0.0, 0.0));
    rows.push_back(make_check(
        "examples", "ex3/zero-u",
        cartesian_example3_check(pts, Example3Variant::ZeroPotential), 0.5,
        0.0));
    rows.push_back(make_check(
        "examples", "ex3/constant-phi",
        cartesian_example3_check(pts, Example3Variant::ConstantHarmonic), 0.5,
        0.0));
  }

  // Example 4: round-sphere band.
  for (double C : {0.0, 2.0}) {
    const HSExampleProblem prob =
        example_problem(HSExample::Sphere, {1.0, 0.0, C});
    const auto grid = linear_grid(-1.2, 1.2, 49);
    const HSResidual res = hs_residual(prob.metric, prob.phi, prob.u, grid);
    rows.push_back(make_check("examples", name_fmt("ex4/C=%g", C, 0.0),
                              res.sup_norm, 0.0, tol));
    double ode_sup = 0.0;
    for (double r : grid) {
      const auto ode = example4_ode_residuals(prob.u, r);
      ode_sup = std::max({ode_sup, std::abs(ode[0]), std::abs(ode[1])});
    }
    rows.push_back(make_check("examples", name_fmt("ex4-ode/C=%g", C, 0.0),
                              ode_sup, 0.0, tol));
  }

  // Kernel invariance: adding 10 x kernel leaves the residual unchanged.
  {
    const HSExampleProblem prob =
        example_problem(HSExample::Schwarzschild, {1.0, 2.0, 0.0});
    const auto grid = log_grid(1.0, 100.0, 41);
    const RadialFunction k =
        hs_kernel_element(HSExample::Schwarzschild, {1.0, 2.0, 0.0});
    const HSPotential shifted = add_kernel(prob.u, k, 10.0);
    const HSResidual res = hs_residual(prob.metric, prob.phi, shifted, grid);
    rows.push_back(make_check("examples", "ex2/kernel-shift", res.sup_norm,
                              0.0, tol));
  }

  // Numerical ODE vs closed forms (step-tolerance level, not golden).
  {
    struct OdeCase {
      HSExample id;
      HSExampleParams params;
      double lo, hi;
      double step;  // smaller on the band, where sec^4 r inflates the
                    // integration constant near the endpoints
      const char* name;
    };
    const OdeCase cases[] = {
        {HSExample::Flat, {1.0, 0.0, 0.0}, 2.0, 50.0, 1e-2, "ode/flat"},
        {HSExample::Schwarzschild, {1.0, 2.0, 0.0}, 2.0, 50.0, 1e-2,
         "ode/schwarzschild"},
        {HSExample::Sphere, {1.0, 0.0, 0.0}, -1.2, 1.2, 2.5e-3,
         "ode/sphere"},
    };
    for (const auto& c : cases) {
      const HSExampleProblem prob = example_problem(c.id, c.params);
      const auto grid = linear_grid(c.lo, c.hi, 97);
      const HSOdeSolution sol =
          solve_hs_ode(prob.metric, prob.phi, prob.u.u.value(c.lo),
                       prob.u.u.deriv(c.lo), grid, c.step);
      double err = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        err = std::max(err, std::abs(sol.u[i] - prob.u.u.value(grid[i])));
      }
      rows.push_back(make_check("examples", c.name, err, 0.0, 1e-7));
      rows.push_back(make_check("examples", std::string(c.name) + "/defect",
                                sol.compatibility_defect, 0.0, 1e-7));
    }
  }
  return rows;
}

std::vector<CheckRow> verify_gradient(const VerifyOptions& opt) {
  const int trials = std::max(1, opt.trials);
  struct Background {
    const char* name;
    RadialMetric metric;
  };
  const Background backgrounds[] = {
      {"flat", RadialMetric::flat(1.0)},
      {"schwarzschild", RadialMetric::schwarzschild({2.0, 1.0})},
  };

  std::vector<CheckRow> rows;
  for (const auto& bg : backgrounds) {
    const CapacitaryPotential potential =
        capacitary_potential(bg.metric, opt.quadrature_tol);
    std::mt19937_64 rng(opt.seed);

    // Draw all perturbations up front so the sequence does not depend on
    // evaluation order, then evaluate (possibly in parallel).
    std::vector<MetricPerturbation> perturbations;
    for (int trial = 0; trial < trials; ++trial) {
      const double lo = 1.1 + 2.0 * u01(rng);
      const double width = 0.5 + 2.0 * u01(rng);
      const double sign = u01(rng) < 0.5 ? -1.0 : 1.0;
      const double amplitude = sign * (0.01 + 0.09 * u01(rng));
      const auto kind = trial % 2 == 0 ? MetricPerturbation::Kind::Conformal
                                       : MetricPerturbation::Kind::RadialRR;
      perturbations.push_back(
          bump_perturbation(kind, lo, lo + width, amplitude));
    }

    std::vector<CheckRow> local(perturbations.size());
    parallel_for(
        perturbations.size(), opt.jobs,
        [&](std::size_t i) {
          const MetricPerturbation& h = perturbations[i];
          const double pairing = gradient_pairing(bg.metric, potential, h,
                                                  opt.quadrature_tol);
          const double fd =
              capacity_fd(bg.metric, h, opt.fd_delta, opt.quadrature_tol);
          const char* kind =
              h.kind == MetricPerturbation::Kind::Conformal ? "conformal"
                                                            : "rr";
          local[i] = make_check(
              "gradient",
              std::string(bg.name) + "/" + kind + "/trial" +
                  std::to_string(i),
              fd, pairing, 1e-6 * std::max(1.0, std::abs(pairing)));
        });
    rows.insert(rows.end(), local.begin(), local.end());

    // Diffeomorphism invariance: pairing against a Lie-derivative field.
    const RadialFunction xi = smooth_bump(1.5, 3.5, 0.05);
    const double lie = gradient_pairing(
        bg.metric, potential, lie_derivative_field(bg.metric, xi), 1.5, 3.5,
        opt.quadrature_tol);
    rows.push_back(make_check("gradient",
                              std::string(bg.name) + "/lie-derivative", lie,
                              0.0, 1e-8));
  }
  return rows;
}

std::vector<CheckRow> verify_flow(const VerifyOptions& opt) {
  std::vector<CheckRow> rows;
  for (double m : {-1.0, 0.0, 2.0}) {
    const RadialMetric g = RadialMetric::schwarzschild({m, 1.0});
    for (double r : {1.0, 2.0, 5.0}) {
      const double v = flow_variation(g, r, opt.quadrature_tol);
      rows.push_back(make_check("flow", name_fmt("unit/m=%g/r=%g", m, r), v,
                                1.0, 1e-8));
    }
  }

  // Flux formula against a finite difference of cap(exterior), both for a
  // mass and for the flat background.
  for (double m : {0.0, 2.0}) {
    const RadialMetric g = RadialMetric::schwarzschild({m, 1.0});
    const double r = 2.0;
    auto cap_at = [&](double rr) {
      return capacity_quadrature(g.with_inner_radius(rr), opt.quadrature_tol);
    };
    const double d = 1e-4;
    const double coarse = (cap_at(r + d) - cap_at(r - d)) / (2.0 * d);
    const double fine = (cap_at(r + 0.5 * d) - cap_at(r - 0.5 * d)) / d;
    const double fd = (4.0 * fine - coarse) / 3.0;
    const double flux = flow_variation(g, r, opt.quadrature_tol);
    rows.push_back(
        make_check("flow", name_fmt("fd/m=%g/r=%g", m, r), flux, fd, 1e-8));
  }
  return rows;
}

std::vector<CheckRow> verify_trace(const VerifyOptions& opt) {
  std::vector<CheckRow> rows;

  struct Background {
    const char* name;
    RadialMetric metric;
  };
  const Background backgrounds[] = {
      {"flat", RadialMetric::flat(1.0)},
      {"schwarzschild", RadialMetric::schwarzschild({2.0, 1.0})},
  };

  for (const auto& bg : backgrounds) {
    const CapacitaryPotential potential =
        capacitary_potential(bg.metric, opt.quadrature_tol);
    // trace S_phi = (1/2) |grad phi|^2.
    double worst = 0.0;
    for (double r : {1.5, 3.0, 10.0}) {
      const RadialTensor S = stress_energy(bg.metric, potential, r);
      const double grad = potential.dphi(r) / bg.metric.a(r);
      worst = std::max(worst, std::abs(tensor_trace(S, bg.metric, r) -
                                       0.5 * grad * grad));
    }
    rows.push_back(make_check(
        "trace", std::string(bg.name) + "/stress-trace", worst, 0.0, 1e-12));

    // Algebraic identity trace(L*u) + 2 Lap u + u R = 0 for a generic u.
    const RadialFunction u =
        inverse_power_series({0.3, -0.2, 0.7, 0.1}, 0);
    double alg = 0.0;
    for (double r : {1.25, 2.0, 6.0}) {
      alg = std::max(alg, trace_identity_consistency(bg.metric, u, r));
    }
    rows.push_back(make_check(
        "trace", std::string(bg.name) + "/lstar-trace", alg, 0.0, 1e-12));

    // Traced-form reconstruction: (L*u - S) - (traced residual) is pure
    // trace with factor -(Lap u + |grad phi|^2 / 4).
    const HarmonicProfile phi = harmonic_profile(potential);
    double recon = 0.0;
    for (double r : {1.5, 4.0}) {
      const RadialTensor L = lstar(bg.metric, u, r);
      const double dp = phi.dphi(r);
      const double a = bg.metric.a(r);
      const double b = bg.metric.b(r);
      RadialTensor res42;
      res42.rr = L.rr + 0.5 * dp * dp;
      res42.ang = L.ang - 0.5 * (dp / a) * (dp / a) * b * b;
      const RadialTensor res43 = traced_form_residual(bg.metric, phi, u, r);
      const double factor =
          laplacian(bg.metric, u, r) + 0.25 * (dp / a) * (dp / a);
      recon = std::max({recon,
                        std::abs(res42.rr - (res43.rr - factor * a * a)),
                        std::abs(res42.ang - (res43.ang - factor * b * b))});
    }
    rows.push_back(make_check(
        "trace", std::string(bg.name) + "/traced-form", recon, 0.0, 1e-12));
  }

  // Trace identity on honest harmonic-static solutions.
  {
    const HSExampleProblem prob =
        example_problem(HSExample::Schwarzschild, {1.0, 2.0, 1.0});
    double worst = 0.0;
    for (double r : {1.5, 3.0, 12.0}) {
      worst = std::max(worst, trace_identity_residual(prob.metric, prob.phi,
                                                      prob.u.u, r));
    }
    rows.push_back(
        make_check("trace", "ex2/identity", worst, 0.0, opt.residual_tol));
  }

  // Scalar constancy: 0 for the flat/Schwarzschild families, 6 on the
  // round-sphere band.
  {
    const auto grid_af = log_grid(1.0, 1e4, 65);
    const ScalarConstancyReport flat_report =
        scalar_constancy_check(RadialMetric::flat(1.0), grid_af);
    rows.push_back(make_check("trace", "scalar/flat",
                              flat_report.max_deviation + flat_report.mean,
                              0.0, 1e-10));
    const ScalarConstancyReport schw_report = scalar_constancy_check(
        RadialMetric::schwarzschild({2.0, 1.0}), grid_af);
    rows.push_back(make_check("trace", "scalar/schwarzschild",
                              schw_report.max_deviation + schw_report.mean,
                              0.0, 1e-10));
    const auto grid_band = linear_grid(-1.2, 1.2, 49);
    const ScalarConstancyReport band_report =
        scalar_constancy_check(RadialMetric::sphere_band(-1.3, 1.3),
                               grid_band);
    rows.push_back(make_check("trace", "scalar/sphere-mean",
                              band_report.mean, 6.0, 1e-10));
    rows.push_back(make_check("trace", "scalar/sphere-deviation",
                              band_report.max_deviation, 0.0, 1e-10));
  }
  return rows;
}

std::vector<CheckRow> verify_bounds(const VerifyOptions& opt) {
  std::vector<CheckRow> rows;
  const double chain_tol = 1e-9;

  const double ms[] = {-1.0, -0.5, 0.0, 1.0, 2.0};
  const double r0s[] = {1.0, 1.5, 2.0, 3.0, 5.0};
  struct GridItem {
    double m, r0;
  };
  std::vector<GridItem> grid;
  for (double m : ms)
    for (double r0 : r0s) grid.push_back({m, r0});

  std::vector<CheckRow> chain(grid.size());
  std::vector<CheckRow> roundtrip(grid.size());
  parallel_for(grid.size(), opt.jobs, [&](std::size_t i) {
    const double m = grid[i].m;
    const double r0 = grid[i].r0;
    const RadialMetric g = RadialMetric::schwarzschild({m, r0});
    const double cap = capacity_quadrature(g, opt.quadrature_tol);
    const BartnikDataRound data = schwarzschild_bartnik_data({m, r0});
    const double chain_gap =
        std::max(std::abs(bray_miao_bound(data) - cap),
                 std::abs(max_capacity_round(data) - cap));
    chain[i] = make_check("bounds", name_fmt("chain/m=%g/r0=%g", m, r0),
                          chain_gap, 0.0,
                          chain_tol * std::max(1.0, std::abs(cap)));

    const SchwarzschildParams back = round_data_to_schwarzschild(data);
    const double rt = std::max(std::abs(back.m - m), std::abs(back.r0 - r0));
    roundtrip[i] =
        make_check("bounds", name_fmt("roundtrip/m=%g/r0=%g", m, r0), rt, 0.0,
                   1e-10 * std::max({1.0, std::abs(m), r0}));
  });
  rows.insert(rows.end(), chain.begin(), chain.end());
  rows.insert(rows.end(), roundtrip.begin(), roundtrip.end());

  // Monotonicity of the sharp bound in both arguments.
  {
    double min_margin = std::numeric_limits<double>::infinity();
    for (double area : {4.0, 10.0, 40.0}) {
      for (double H : {0.0, 0.5, 2.0}) {
        const double base = max_capacity_round({area, H});
        min_margin = std::min(
            min_margin, max_capacity_round({area * 1.01, H}) - base);
        min_margin = std::min(
            min_margin, max_capacity_round({area, H + 0.01}) - base);
      }
    }
    rows.push_back(make_check("bounds", "monotone/min-margin",
                              min_margin > 0.0 ? 1.0 : 0.0, 1.0, 0.0));
  }

  // Pinned closed-form values.
  {
    constexpr double kPi = 3.14159265358979323846;
    rows.push_back(make_check("bounds", "value/area=4pi/H=2",
                              bray_miao_bound({4.0 * kPi, 2.0}), 1.0, 1e-14));
    rows.push_back(make_check("bounds", "value/area=64pi/H=0",
                              bray_miao_bound({64.0 * kPi, 0.0}), 2.0,
                              1e-14));
    rows.push_back(make_check("bounds", "value/area=16pi/H=1",
                              max_capacity_round({16.0 * kPi, 1.0}), 2.0,
                              1e-14));
    // m = -1, r0 = 1: area = pi/4, H = 24.
    const BartnikDataRound d = schwarzschild_bartnik_data({-1.0, 1.0});
    rows.push_back(make_check("bounds", "value/m=-1/area", d.area, kPi / 4.0,
                              1e-14));
    rows.push_back(make_check("bounds", "value/m=-1/H", d.H, 24.0, 1e-12));
  }

  // Admissibility: a metric carries its own data; flat space fails against
  // horizon data (H = 0) because its boundary is strictly mean-convex.
  {
    const auto sample = log_grid(1.0, 1e4, 33);
    const RadialMetric schw = RadialMetric::schwarzschild({2.0, 1.0});
    const AdmissibilityReport own =
        admissibility(schw, schwarzschild_bartnik_data({2.0, 1.0}), sample);
    rows.push_back(make_check("bounds", "admissible/self",
                              own.admissible ? 1.0 : 0.0, 1.0, 0.0));

    const BartnikDataRound horizon = schwarzschild_bartnik_data({2.0, 1.0});
    const auto sample4 = log_grid(4.0, 4e4, 33);
    const AdmissibilityReport flat_vs =
        admissibility(RadialMetric::flat(4.0), horizon, sample4);
    rows.push_back(make_check("bounds", "admissible/flat-vs-horizon",
                              flat_vs.admissible ? 1.0 : 0.0, 0.0, 0.0));

    bool mismatch_raised = false;
    try {
      admissibility(RadialMetric::flat(1.0), horizon, sample);
    } catch (const std::invalid_argument&) {
      mismatch_raised = true;
    }
    rows.push_back(make_check("bounds", "admissible/area-mismatch-raises",
                              mismatch_raised ? 1.0 : 0.0, 1.0, 0.0));
  }
  return rows;
}

std::vector<CheckRow> verify_collar(const VerifyOptions& opt) {
  (void)opt;
  std::vector<CheckRow> rows;
  constexpr double kPi = 3.14159265358979323846;

  const double v = collar_capacity_bound({100.0, 0.1, 4.0 * kPi});
  const double expected = 4.0 / 100.0 * (0.5 + 0.1 / 24.0);
  rows.push_back(make_check("collar", "value/A=100", v, expected, 1e-12));

  const double As[] = {10.0, 100.0, 1000.0, 10000.0};
  for (int i = 0; i + 1 < 4; ++i) {
    const double b0 = collar_capacity_bound({As[i], 0.1, 4.0 * kPi});
    const double b1 = collar_capacity_bound({As[i + 1], 0.1, 4.0 * kPi});
    const double slope =
        (std::log(b1) - std::log(b0)) / (std::log(As[i + 1]) -
                                         std::log(As[i]));
    rows.push_back(make_check(
        "collar", name_fmt("slope/A=%g..%g", As[i], As[i + 1]), slope, -1.0,
        1e-12));
  }
  return rows;
}

std::vector<CheckRow> verify_all(const VerifyOptions& opt) {
  std::vector<CheckRow> rows;
  for (const auto* name :
       {"examples", "gradient", "flow", "trace", "bounds", "collar"}) {
    const auto part = run_suite(name, opt);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::vector<CheckRow> run_suite(const std::string& name,
                                const VerifyOptions& opt) {
  if (name == "examples") return verify_examples(opt);
  if (name == "gradient") return verify_gradient(opt);
  if (name == "flow") return verify_flow(opt);
  if (name == "trace") return verify_trace(opt);
  if (name == "bounds") return verify_bounds(opt);
  if (name == "collar") return verify_collar(opt);
  if (name == "all") return verify_all(opt);
  throw std::invalid_argument("unknown verification suite: " + name);
}

bool all_pass(const std::vector<CheckRow>& rows) {
  for (const CheckRow& row : rows) {
    if (!row.pass) return false;
  }
  return true;
}

}  // namespace capaflat
