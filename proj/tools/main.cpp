// Command-line front end: seeded runs, method comparison, CSV/SVG emission.
//
// Exit codes: 0 success, 2 configuration or I/O error, 3 dimension/constraint
// guard, 4 validation failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dickeenv/approx.hpp"
#include "dickeenv/dicke.hpp"
#include "dickeenv/env_dynamics.hpp"
#include "dickeenv/io.hpp"
#include "dickeenv/rng.hpp"

namespace {

using namespace dickeenv;

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * double(i) / double(steps - 1);
  }
  return grid;
}

std::string join_sig(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += format_sig(values[i]);
  }
  return s;
}

// ------------------------------------------------------------------ dicke-scan

struct DickeScanOptions {
  int n_min = 0;
  int n_max = 20;
  double gt_max = 15.0;
  int steps = 600;
  std::string out = "dicke_scan.csv";
  std::string format = "csv";
};

int run_dicke_scan(const DickeScanOptions& opt) {
  const std::vector<double> grid = linspace(0.0, opt.gt_max, opt.steps);
  const std::vector<HeatmapCell> cells =
      concurrence_heatmap(opt.n_min, opt.n_max, grid);

  const std::vector<std::string> meta = {
      "subcommand = dicke-scan",
      "n_min = " + std::to_string(opt.n_min),
      "n_max = " + std::to_string(opt.n_max),
      "gt_max = " + format_sig(opt.gt_max),
      "steps = " + std::to_string(opt.steps),
  };
  if (opt.format == "svg") {
    std::vector<double> rows, values;
    rows.reserve(static_cast<std::size_t>(opt.n_max - opt.n_min + 1));
    for (int n = opt.n_min; n <= opt.n_max; ++n) rows.push_back(n);
    values.reserve(cells.size());
    for (const HeatmapCell& c : cells) values.push_back(c.concurrence);
    write_file(opt.out, [&](std::ostream& os) {
      write_svg_heatmap(os, rows, grid, values, "n", "gt");
    });
  } else {
    std::vector<double> col_n, col_gt, col_c;
    col_n.reserve(cells.size());
    col_gt.reserve(cells.size());
    col_c.reserve(cells.size());
    for (const HeatmapCell& c : cells) {
      col_n.push_back(c.n);
      col_gt.push_back(c.gt);
      col_c.push_back(c.concurrence);
    }
    write_file(opt.out, [&](std::ostream& os) {
      write_csv(os, meta,
                {{"n", &col_n}, {"gt", &col_gt}, {"concurrence", &col_c}});
    });
  }
  std::cout << "wrote " << opt.out << " (" << cells.size() << " cells)\n";
  return 0;
}

// --------------------------------------------------------------------- env-run

struct EnvRunOptions {
  int A = 7;
  double g_tilde = 1.0;
  double delta_mean = 10.0;
  double delta_std = 0.3;
  std::uint64_t seed = 1;
  std::string init = "ground-photon";
  double gt_max = 450.0;
  int steps = 4500;
  std::vector<std::string> methods = {"analytic_sum", "gaussian"};
  int n_max = -1;
  double gap_factor = 0.02;
  int mc_samples = 0;
  std::string out = "env_run.csv";
  std::string format = "csv";
};

int run_env_run(const EnvRunOptions& opt) {
  const InitKind kind = opt.init == "symmetric-vacuum"
                            ? InitKind::symmetric_atoms_vacuum
                            : InitKind::ground_atoms_one_photon;
  const EnvironmentSpec spec =
      opt.A == 0 ? EnvironmentSpec::make(0, opt.g_tilde, {}, 1.0, opt.gap_factor)
                 : drawn_environment(opt.delta_mean, opt.delta_std, opt.A,
                                     opt.seed, opt.g_tilde, 1.0, opt.gap_factor);
  const std::vector<double> grid = linspace(0.0, opt.gt_max, opt.steps);

  ApproxParams approx;
  approx.g = 1.0;
  approx.g_tilde = opt.g_tilde;
  approx.delta_mean = opt.delta_mean;
  approx.delta_std = opt.delta_std;
  approx.A = opt.A;

  std::vector<ConcurrenceTrace> traces;
  for (const std::string& name : opt.methods) {
    if (name == "exact_full") {
      traces.push_back(concurrence_trace_exact(spec, 1.0, kind, grid,
                                               TraceMethod::exact_full,
                                               opt.n_max));
    } else if (name == "effective") {
      traces.push_back(concurrence_trace_exact(spec, 1.0, kind, grid,
                                               TraceMethod::effective,
                                               opt.n_max));
    } else if (name == "analytic_sum") {
      traces.push_back(opt.mc_samples > 0
                           ? concurrence_trace_mc(spec, 1.0, kind, grid,
                                                  opt.mc_samples, opt.seed)
                           : concurrence_trace_sum(spec, 1.0, kind, grid));
    } else if (name == "gaussian") {
      traces.push_back(concurrence_gaussian(approx, kind, grid));
    } else {
      throw Error("unknown method '" + name +
                  "'; expected exact_full, effective, analytic_sum or gaussian");
    }
  }

  std::vector<std::string> meta = {
      "subcommand = env-run",
      "A = " + std::to_string(opt.A),
      "g_tilde = " + format_sig(opt.g_tilde),
      "delta_mean = " + format_sig(opt.delta_mean),
      "delta_std = " + format_sig(opt.delta_std),
      "seed = " + std::to_string(opt.seed),
      "init = " + opt.init,
      "gt_max = " + format_sig(opt.gt_max),
      "steps = " + std::to_string(opt.steps),
      "n_max = " + std::to_string(opt.n_max > 0 ? opt.n_max : opt.A + 1),
      "gap_factor = " + format_sig(opt.gap_factor),
      "mc_samples = " + std::to_string(opt.mc_samples),
      "detunings = " + join_sig(spec.deltas),
  };
  for (const std::string& w : spec.warnings) meta.push_back("warning: " + w);
  for (const ConcurrenceTrace& t : traces) {
    for (const std::string& w : t.meta.warnings) {
      meta.push_back("warning: " + w);
      std::cerr << "warning: " << w << "\n";
    }
  }

  std::vector<Column> columns = {{"gt", &grid}};
  for (std::size_t i = 0; i < traces.size(); ++i) {
    columns.push_back({opt.methods[i], &traces[i].values});
  }
  if (opt.format == "svg") {
    std::vector<Column> series(columns.begin() + 1, columns.end());
    write_file(opt.out, [&](std::ostream& os) {
      write_svg_traces(os, grid, series, "gt");
    });
  } else {
    write_file(opt.out,
               [&](std::ostream& os) { write_csv(os, meta, columns); });
  }
  std::cout << "wrote " << opt.out << " (" << grid.size() << " rows, "
            << traces.size() << " method column"
            << (traces.size() == 1 ? "" : "s") << ")\n";
  return 0;
}

// --------------------------------------------------------------------- predict

struct PredictOptions {
  int A = 7;
  double g_tilde = 1.0;
  double delta_mean = 10.0;
  double delta_std = 0.0;
  int k_max = 3;
  double g_hz = 0.0;
  double delta_mean_hz = 0.0;
  double g_tilde_hz = 0.0;
};

int run_predict(const PredictOptions& opt) {
  ApproxParams p;
  p.g = 1.0;
  p.g_tilde = opt.g_tilde;
  p.delta_mean = opt.delta_mean;
  p.delta_std = opt.delta_std;
  p.A = opt.A;
  const CollapseRevivalTimes times = collapse_revival_times(p, opt.k_max);
  std::cout << "gt_c = " << format_sig(times.gt_collapse) << "\n";
  for (std::size_t k = 0; k < times.gt_revivals.size(); ++k) {
    std::cout << "gt_R(k=" << (k + 1)
              << ") = " << format_sig(times.gt_revivals[k]) << "\n";
  }
  if (opt.g_hz > 0.0) {
    if (!(opt.delta_mean_hz > 0.0)) {
      throw Error("predict: --delta-mean-hz is required with --g-hz");
    }
    const double g_tilde_hz =
        opt.g_tilde_hz > 0.0 ? opt.g_tilde_hz : opt.g_hz;
    const FeasibilityReport report = physical_feasibility(
        opt.g_hz, opt.delta_mean_hz, g_tilde_hz, opt.A, opt.k_max);
    std::cout << "t_c = " << format_sig(report.t_collapse_s) << " s ("
              << format_sig(report.t_collapse_s * 1e6) << " us)\n";
    for (std::size_t k = 0; k < report.t_revivals_s.size(); ++k) {
      std::cout << "t_R(k=" << (k + 1)
                << ") = " << format_sig(report.t_revivals_s[k]) << " s ("
                << format_sig(report.t_revivals_s[k] * 1e6) << " us)\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------------- validate

struct CheckResult {
  std::string name;
  double measured = 0.0;
  std::string comparison;  // e.g. "<= 1e-8" or "in [2.5, 6]"
  bool pass = false;
};

CheckResult check_dicke_analytic_vs_exact() {
  double max_dev = 0.0;
  for (int n = 1; n <= 3; ++n) {
    DickeParams params;
    params.n = n;
    const SystemLayout layout(n, 0);
    const Propagator prop(tc_hamiltonian(params, layout));
    StateVector psi0 = StateVector::Zero(layout.dim());
    psi0((1 * 2 + 1) * (n + 1) + n) = 1.0;  // |00>|n>
    for (int i = 0; i < 50; ++i) {
      const double gt = 2.0 * 3.14159265358979323846 * i / 49.0;
      const StateVector psi = prop.evolve(psi0, gt);
      ComplexMatrix rho =
          reduced_density_from_state(psi, layout.tensor(), {0, 1});
      const double exact =
          wootters_concurrence(TwoQubitState(DensityMatrix{std::move(rho)}));
      max_dev = std::max(max_dev,
                         std::abs(exact - analytic_concurrence(params, gt)));
    }
  }
  return {"dicke_analytic_vs_exact", max_dev, "<= 1e-8", max_dev <= 1e-8};
}

CheckResult check_closed_form_vs_expm() {
  const EnvironmentSpec spec = drawn_environment(10.0, 0.3, 4, 7, 1.0, 1.0, 0.02);
  const SystemLayout layout(1, spec.A);
  const Propagator prop(effective_hamiltonian(spec, 1.0, layout, false));
  GaussianDraw rng(1234);
  double max_dev = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto config_index =
        static_cast<std::uint32_t>(rng.raw() & ((1u << spec.A) - 1));
    const double gt = 20.0 * rng.uniform01();
    const EnvConfiguration config = make_config(spec, 1.0, config_index);
    const SectorIndices idx = sector_indices(layout, config_index);
    const ComplexMatrix big = prop.unitary(gt);
    const int rows[3] = {idx.ground_one_photon, idx.a_excited_vacuum,
                         idx.b_excited_vacuum};
    const ComplexMatrix closed = closed_form_u(spec, 1.0, 1, config, gt);
    const Complex phase = std::exp(Complex(0.0, -config.y_half * gt));
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        max_dev = std::max(
            max_dev, std::abs(big(rows[r], rows[c]) - phase * closed(r, c)));
      }
    }
  }
  return {"closed_form_vs_expm", max_dev, "<= 1e-9", max_dev <= 1e-9};
}

CheckResult check_complementarity() {
  const EnvironmentSpec spec = drawn_environment(10.0, 0.3, 6, 3, 1.0, 1.0, 0.02);
  const std::vector<double> grid = linspace(0.0, 300.0, 200);
  const ConcurrenceTrace c1 = concurrence_trace_sum(
      spec, 1.0, InitKind::ground_atoms_one_photon, grid);
  const ConcurrenceTrace c2 = concurrence_trace_sum(
      spec, 1.0, InitKind::symmetric_atoms_vacuum, grid);
  double max_dev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    max_dev = std::max(max_dev, std::abs(c1.values[i] + c2.values[i] - 1.0));
  }
  return {"complementarity_c1_plus_c2", max_dev, "<= 1e-12", max_dev <= 1e-12};
}

CheckResult check_analytic_vs_effective() {
  const EnvironmentSpec spec = drawn_environment(10.0, 0.3, 4, 5, 1.0, 1.0, 0.02);
  const std::vector<double> grid = linspace(0.0, 30.0, 150);
  const ConcurrenceTrace sum = concurrence_trace_sum(
      spec, 1.0, InitKind::ground_atoms_one_photon, grid);
  const ConcurrenceTrace dense = concurrence_trace_exact(
      spec, 1.0, InitKind::ground_atoms_one_photon, grid,
      TraceMethod::effective, 1);
  double max_dev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    max_dev = std::max(max_dev, std::abs(sum.values[i] - dense.values[i]));
  }
  return {"analytic_sum_vs_effective", max_dev, "<= 5e-3", max_dev <= 5e-3};
}

CheckResult check_eps2_scaling() {
  const int A = 3;
  const std::vector<double> base =
      draw_detunings(20.0, 0.5, A, 11, 1.0, 1.0, 0.02);
  std::vector<double> doubled = base;
  for (double& d : doubled) d *= 2.0;
  const EnvironmentSpec near_spec = EnvironmentSpec::make(A, 1.0, base, 1.0, 0.02);
  const EnvironmentSpec far_spec =
      EnvironmentSpec::make(A, 1.0, doubled, 1.0, 0.02);
  const std::vector<double> grid = linspace(0.0, 20.0, 40);
  const double dev_near = effective_vs_full_deviation(
      near_spec, 1.0, InitKind::ground_atoms_one_photon, grid, true);
  const double dev_far = effective_vs_full_deviation(
      far_spec, 1.0, InitKind::ground_atoms_one_photon, grid, true);
  const double ratio = dev_near / dev_far;
  return {"eps2_scaling_ratio", ratio, "in [2.5, 6]",
          ratio >= 2.5 && ratio <= 6.0};
}

int run_validate() {
  const std::vector<CheckResult> results = {
      check_dicke_analytic_vs_exact(), check_closed_form_vs_expm(),
      check_complementarity(), check_analytic_vs_effective(),
      check_eps2_scaling()};
  bool all_pass = true;
  for (const CheckResult& r : results) {
    std::cout << r.name << ": measured = " << format_sig(r.measured)
              << ", required " << r.comparison << " -> "
              << (r.pass ? "PASS" : "FAIL") << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement dynamics of two resonant qubits and a cavity "
               "mode in a dispersive atomic environment"};
  app.require_subcommand(1);

  DickeScanOptions scan;
  CLI::App* cmd_scan = app.add_subcommand(
      "dicke-scan", "Concurrence heatmap over initial photon number and gt");
  cmd_scan->add_option("--n-min", scan.n_min, "Lowest photon number");
  cmd_scan->add_option("--n-max", scan.n_max, "Highest photon number");
  cmd_scan->add_option("--gt-max", scan.gt_max, "Grid end (gt units)")
      ->check(CLI::PositiveNumber);
  cmd_scan->add_option("--steps", scan.steps, "Grid points")
      ->check(CLI::Range(2, 1000000));
  cmd_scan->add_option("--out", scan.out, "Output path");
  cmd_scan->add_option("--format", scan.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));

  EnvRunOptions env;
  CLI::App* cmd_env = app.add_subcommand(
      "env-run", "Concurrence traces in a dispersive atomic environment");
  cmd_env->add_option("--A", env.A, "Environment atom count")
      ->check(CLI::Range(0, 63));
  cmd_env->add_option("--g-tilde", env.g_tilde, "Environment coupling / g")
      ->check(CLI::PositiveNumber);
  cmd_env->add_option("--delta-mean", env.delta_mean, "Mean detuning / g");
  cmd_env->add_option("--delta-std", env.delta_std, "Detuning std / g");
  cmd_env->add_option("--seed", env.seed, "Detuning draw seed");
  cmd_env->add_option("--init", env.init, "Initial condition")
      ->check(CLI::IsMember({"ground-photon", "symmetric-vacuum"}));
  cmd_env->add_option("--gt-max", env.gt_max, "Grid end (gt units)")
      ->check(CLI::PositiveNumber);
  cmd_env->add_option("--steps", env.steps, "Grid points")
      ->check(CLI::Range(2, 10000000));
  cmd_env->add_option("--methods", env.methods,
                      "exact_full, effective, analytic_sum, gaussian")
      ->delimiter(',');
  cmd_env->add_option("--n-max", env.n_max,
                      "Photon cutoff override (default A+1)");
  cmd_env->add_option("--gap-factor", env.gap_factor,
                      "Min pairwise detuning gap in units of g");
  cmd_env->add_option("--mc-samples", env.mc_samples,
                      "Monte Carlo sample count for analytic_sum (0 = exhaustive)");
  cmd_env->add_option("--out", env.out, "Output path");
  cmd_env->add_option("--format", env.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));

  PredictOptions pred;
  CLI::App* cmd_pred = app.add_subcommand(
      "predict", "Collapse/revival time predictions");
  cmd_pred->add_option("--A", pred.A, "Environment atom count")
      ->check(CLI::Range(1, 1000000));
  cmd_pred->add_option("--g-tilde", pred.g_tilde, "Environment coupling / g")
      ->check(CLI::PositiveNumber);
  cmd_pred->add_option("--delta-mean", pred.delta_mean, "Mean detuning / g");
  cmd_pred->add_option("--delta-std", pred.delta_std, "Detuning std / g");
  cmd_pred->add_option("--k-max", pred.k_max, "Number of revival orders")
      ->check(CLI::Range(1, 1000));
  cmd_pred->add_option("--g-hz", pred.g_hz,
                       "Physical g/2pi in Hz (enables seconds output)");
  cmd_pred->add_option("--delta-mean-hz", pred.delta_mean_hz,
                       "Physical mean detuning /2pi in Hz");
  cmd_pred->add_option("--g-tilde-hz", pred.g_tilde_hz,
                       "Physical environment coupling /2pi in Hz (default g-hz)");

  app.add_subcommand("validate", "Cross-method oracle checks; exit 4 on FAIL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_scan->parsed()) return run_dicke_scan(scan);
    if (cmd_env->parsed()) return run_env_run(env);
    if (cmd_pred->parsed()) return run_predict(pred);
    return run_validate();
  } catch (const DimensionGuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CutoffTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConstraintUnsatisfiable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const TooManyConfigurations& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
