#include "dickeenv/env_dynamics.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "dickeenv/parallel.hpp"
#include "dickeenv/rng.hpp"

namespace dickeenv {

namespace {

/// Rabi frequency of one environment configuration given as a bit pattern
/// (bit j-1 = env atom j excited), without materializing an EnvConfiguration.
double config_omega(const EnvironmentSpec& spec, double g, std::uint32_t bits) {
  double y_half = 0.0;
  double lambda = 1.0;
  for (int j = 0; j < spec.A; ++j) {
    const double s = ((bits >> j) & 1u) ? 0.5 : -0.5;
    y_half += spec.g_tilde * spec.epsilons[static_cast<std::size_t>(j)] * s;
    lambda += spec.epsilons[static_cast<std::size_t>(j)] *
              spec.epsilons[static_cast<std::size_t>(j)] * s;
  }
  return std::sqrt(y_half * y_half + 2.0 * g * g * lambda * lambda);
}

void check_enumeration(const EnvironmentSpec& spec, const char* what) {
  if (spec.A > kEnumerationGuard) {
    throw TooManyConfigurations(std::string(what) + ": 2^" +
                                std::to_string(spec.A) +
                                " configurations exceeds the exhaustive guard A <= " +
                                std::to_string(kEnumerationGuard) +
                                "; use the Monte Carlo pathway");
  }
}

TraceMeta make_meta(const EnvironmentSpec& spec, double g, InitKind kind) {
  TraceMeta meta;
  meta.A = spec.A;
  meta.g = g;
  meta.g_tilde = spec.g_tilde;
  meta.delta_mean = spec.delta_mean;
  meta.delta_std = spec.delta_std;
  meta.seed = spec.seed;
  meta.init = kind;
  meta.deltas = spec.deltas;
  return meta;
}

double average_over_omegas(const std::vector<double>& omegas, InitKind kind,
                           double t) {
  double acc = 0.0;
  for (double omega : omegas) {
    const double s = std::sin(omega * t);
    acc += kind == InitKind::ground_atoms_one_photon ? s * s : 1.0 - s * s;
  }
  return acc / static_cast<double>(omegas.size());
}

}  // namespace

const char* to_string(TraceMethod m) {
  switch (m) {
    case TraceMethod::exact_full: return "exact_full";
    case TraceMethod::effective: return "effective";
    case TraceMethod::analytic_sum: return "analytic_sum";
    case TraceMethod::gaussian: return "gaussian";
  }
  return "unknown";
}

const char* to_string(InitKind k) {
  switch (k) {
    case InitKind::ground_atoms_one_photon: return "ground-photon";
    case InitKind::symmetric_atoms_vacuum: return "symmetric-vacuum";
  }
  return "unknown";
}

StateVector env_initial_state(const EnvironmentSpec& spec) {
  const int dim = 1 << spec.A;
  return StateVector::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
}

StateVector initial_state(const EnvironmentSpec& spec, const SystemLayout& layout,
                          InitKind kind) {
  if (layout.num_env != spec.A) {
    throw DimensionMismatch("initial_state: layout has " +
                            std::to_string(layout.num_env) +
                            " environment atoms, spec has " +
                            std::to_string(spec.A));
  }
  if (kind == InitKind::ground_atoms_one_photon && layout.n_max < 1) {
    throw CutoffTooSmall("initial_state: one-photon initial state needs n_max >= 1");
  }
  const int env_dim = 1 << spec.A;
  const double env_amp = 1.0 / std::sqrt(double(env_dim));
  StateVector psi = StateVector::Zero(layout.dim());
  // idx(ia, ib, nph, e) with ia/ib = 0 excited, 1 ground.
  const auto idx = [&](int ia, int ib, int nph, int e) {
    return ((ia * 2 + ib) * (layout.n_max + 1) + nph) * env_dim + e;
  };
  for (int e = 0; e < env_dim; ++e) {
    if (kind == InitKind::ground_atoms_one_photon) {
      psi(idx(1, 1, 1, e)) = env_amp;  // |00> x |1ph>
    } else {
      const double amp = env_amp / std::sqrt(2.0);
      psi(idx(0, 1, 0, e)) = amp;  // |10> x |0ph>
      psi(idx(1, 0, 0, e)) = amp;  // |01> x |0ph>
    }
  }
  return psi;
}

std::vector<EnvConfiguration> enumerate_configs(const EnvironmentSpec& spec,
                                                double g) {
  check_enumeration(spec, "enumerate_configs");
  const std::uint32_t count = 1u << spec.A;
  std::vector<EnvConfiguration> configs;
  configs.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    configs.push_back(make_config(spec, g, m));
  }
  return configs;
}

TwoQubitState reduced_density_analytic(const EnvironmentSpec& spec, double g,
                                       InitKind kind, double gt) {
  const double w_psi = concurrence_sum(spec, g, kind, gt);
  return psi_plus_mixture(w_psi, 1.0 - w_psi, 0.0);
}

double concurrence_sum(const EnvironmentSpec& spec, double g, InitKind kind,
                       double gt) {
  check_enumeration(spec, "concurrence_sum");
  const std::uint32_t count = 1u << spec.A;
  const double t = gt / g;
  double acc = 0.0;
  for (std::uint32_t m = 0; m < count; ++m) {
    const double s = std::sin(config_omega(spec, g, m) * t);
    acc += kind == InitKind::ground_atoms_one_photon ? s * s : 1.0 - s * s;
  }
  return acc / static_cast<double>(count);
}

ConcurrenceTrace concurrence_trace_sum(const EnvironmentSpec& spec, double g,
                                       InitKind kind,
                                       const std::vector<double>& gt_grid) {
  check_enumeration(spec, "concurrence_trace_sum");
  const std::size_t count = std::size_t{1} << spec.A;
  std::vector<double> omegas(count);
  parallel_for(count, [&](std::size_t m) {
    omegas[m] = config_omega(spec, g, static_cast<std::uint32_t>(m));
  });

  ConcurrenceTrace trace;
  trace.gt = gt_grid;
  trace.values.resize(gt_grid.size());
  trace.method = TraceMethod::analytic_sum;
  trace.meta = make_meta(spec, g, kind);
  parallel_for(gt_grid.size(), [&](std::size_t i) {
    trace.values[i] = average_over_omegas(omegas, kind, gt_grid[i] / g);
  });
  return trace;
}

ConcurrenceTrace concurrence_trace_exact(const EnvironmentSpec& spec, double g,
                                         InitKind kind,
                                         const std::vector<double>& gt_grid,
                                         TraceMethod method, int n_max_override) {
  if (method != TraceMethod::exact_full && method != TraceMethod::effective) {
    throw Error("concurrence_trace_exact: method must be exact_full or effective");
  }
  if (spec.A > kExactFullGuardA) {
    throw DimensionGuardExceeded(
        "concurrence_trace_exact: dense evolution guarded at A <= " +
        std::to_string(kExactFullGuardA) + " (got A = " + std::to_string(spec.A) +
        ")");
  }
  const int n_max = n_max_override > 0 ? n_max_override : spec.A + 1;
  if (method == TraceMethod::exact_full && n_max < spec.A + 1) {
    throw CutoffTooSmall(
        "concurrence_trace_exact: the full Hamiltonian can promote every "
        "environment excitation into the field; need n_max >= A + 1 = " +
        std::to_string(spec.A + 1) + " (got " + std::to_string(n_max) + ")");
  }
  const SystemLayout layout(n_max, spec.A);
  const ComplexMatrix h = method == TraceMethod::exact_full
                              ? full_hamiltonian(spec, g, layout)
                              : effective_hamiltonian(spec, g, layout, false);
  const Propagator prop(h);
  const StateVector psi0 = initial_state(spec, layout, kind);
  const TensorLayout tensor = layout.tensor();

  ConcurrenceTrace trace;
  trace.gt = gt_grid;
  trace.values.resize(gt_grid.size());
  trace.method = method;
  trace.meta = make_meta(spec, g, kind);
  parallel_for(gt_grid.size(), [&](std::size_t i) {
    const StateVector psi = prop.evolve(psi0, gt_grid[i] / g);
    ComplexMatrix rho = reduced_density_from_state(psi, tensor, {0, 1});
    trace.values[i] =
        wootters_concurrence(TwoQubitState(DensityMatrix{std::move(rho)}));
  });
  return trace;
}

double concurrence_sum_mc(const EnvironmentSpec& spec, double g, InitKind kind,
                          double gt, int samples, std::uint64_t seed) {
  if (samples <= 0) {
    throw Error("concurrence_sum_mc: samples must be positive");
  }
  GaussianDraw rng(seed);
  const double t = gt / g;
  double acc = 0.0;
  for (int k = 0; k < samples; ++k) {
    double y_half = 0.0;
    double lambda = 1.0;
    for (int j = 0; j < spec.A; ++j) {
      const double sj = rng.uniform01() < 0.5 ? 0.5 : -0.5;
      y_half += spec.g_tilde * spec.epsilons[static_cast<std::size_t>(j)] * sj;
      lambda += spec.epsilons[static_cast<std::size_t>(j)] *
                spec.epsilons[static_cast<std::size_t>(j)] * sj;
    }
    const double omega = std::sqrt(y_half * y_half + 2.0 * g * g * lambda * lambda);
    const double s = std::sin(omega * t);
    acc += kind == InitKind::ground_atoms_one_photon ? s * s : 1.0 - s * s;
  }
  return acc / static_cast<double>(samples);
}

ConcurrenceTrace concurrence_trace_mc(const EnvironmentSpec& spec, double g,
                                      InitKind kind,
                                      const std::vector<double>& gt_grid,
                                      int samples, std::uint64_t seed) {
  if (samples <= 0) {
    throw Error("concurrence_trace_mc: samples must be positive");
  }
  // Draw the configuration sample once and reuse it across the grid, so the
  // trace is a smooth function of gt for a fixed seed.
  GaussianDraw rng(seed);
  std::vector<double> omegas(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    double y_half = 0.0;
    double lambda = 1.0;
    for (int j = 0; j < spec.A; ++j) {
      const double sj = rng.uniform01() < 0.5 ? 0.5 : -0.5;
      y_half += spec.g_tilde * spec.epsilons[static_cast<std::size_t>(j)] * sj;
      lambda += spec.epsilons[static_cast<std::size_t>(j)] *
                spec.epsilons[static_cast<std::size_t>(j)] * sj;
    }
    omegas[static_cast<std::size_t>(k)] =
        std::sqrt(y_half * y_half + 2.0 * g * g * lambda * lambda);
  }

  ConcurrenceTrace trace;
  trace.gt = gt_grid;
  trace.values.resize(gt_grid.size());
  trace.method = TraceMethod::analytic_sum;
  trace.meta = make_meta(spec, g, kind);
  parallel_for(gt_grid.size(), [&](std::size_t i) {
    trace.values[i] = average_over_omegas(omegas, kind, gt_grid[i] / g);
  });
  return trace;
}

double effective_vs_full_deviation(const EnvironmentSpec& spec, double g,
                                   InitKind kind,
                                   const std::vector<double>& gt_grid,
                                   bool frame_corrected, int n_max_override) {
  if (spec.A > kExactFullGuardA) {
    throw DimensionGuardExceeded(
        "effective_vs_full_deviation: dense evolution guarded at A <= " +
        std::to_string(kExactFullGuardA));
  }
  const int n_max = n_max_override > 0 ? n_max_override : spec.A + 1;
  if (n_max < spec.A + 1) {
    throw CutoffTooSmall("effective_vs_full_deviation: need n_max >= A + 1");
  }
  const SystemLayout layout(n_max, spec.A);
  const ComplexMatrix h_full = full_hamiltonian(spec, g, layout);
  // The effective picture keeps the bare environment splitting: the
  // dressing transform acts there too, so the comparison frame must carry
  // the sum of delta_j s_zj even though it is invisible to the naive
  // reduced dynamics.
  ComplexMatrix h_eff = effective_hamiltonian(spec, g, layout, false);
  for (int j = 0; j < spec.A; ++j) {
    h_eff += spec.deltas[static_cast<std::size_t>(j)] *
             spin_operator(layout, SpinKind::z, 2 + j);
  }
  const Propagator prop_full(h_full);
  const Propagator prop_eff(h_eff);
  const StateVector psi0 = initial_state(spec, layout, kind);
  const TensorLayout tensor = layout.tensor();

  ComplexMatrix v;
  if (frame_corrected) {
    v = frame_dressing(spec, layout);
  }
  const StateVector psi0_eff = frame_corrected ? StateVector(v * psi0) : psi0;

  std::vector<double> devs(gt_grid.size());
  parallel_for(gt_grid.size(), [&](std::size_t i) {
    const double t = gt_grid[i] / g;
    const StateVector psi_full = prop_full.evolve(psi0, t);
    StateVector psi_approx = prop_eff.evolve(psi0_eff, t);
    if (frame_corrected) {
      psi_approx = v.adjoint() * psi_approx;
    }
    const ComplexMatrix rho_full =
        reduced_density_from_state(psi_full, tensor, {0, 1});
    const ComplexMatrix rho_approx =
        reduced_density_from_state(psi_approx, tensor, {0, 1});
    devs[i] = (rho_full - rho_approx).cwiseAbs().maxCoeff();
  });
  double max_dev = 0.0;
  for (double d : devs) max_dev = std::max(max_dev, d);
  return max_dev;
}

}  // namespace dickeenv
