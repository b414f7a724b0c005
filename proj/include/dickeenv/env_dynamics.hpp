#pragma once

#include <string>

#include "dickeenv/concurrence.hpp"
#include "dickeenv/env_model.hpp"

namespace dickeenv {

inline constexpr int kEnumerationGuard = 24;   // exhaustive sums up to 2^24 configs
inline constexpr int kExactFullGuardA = 8;     // dense full-space evolution guard

/// Initial condition of the resonant pair + field; the environment always
/// starts in the equal superposition (|0> + |1>)/sqrt(2) per atom.
enum class InitKind {
  ground_atoms_one_photon,  // |00> x |1ph>  — sin^2 configuration sum
  symmetric_atoms_vacuum,   // |psi+> x |0ph> — cos^2 configuration sum
};

enum class TraceMethod { exact_full, effective, analytic_sum, gaussian };

const char* to_string(TraceMethod m);
const char* to_string(InitKind k);

/// Equal-weight superposition of all 2^A environment basis states
/// (every amplitude 2^{-A/2}); dimension 1 for A = 0.
StateVector env_initial_state(const EnvironmentSpec& spec);

/// Full-space product state: resonant part per `kind`, field Fock part,
/// environment in env_initial_state.
StateVector initial_state(const EnvironmentSpec& spec, const SystemLayout& layout,
                          InitKind kind);

/// All 2^A sign vectors in binary-counting order (bit j-1 of the index is
/// atom j). Guarded at A <= 24.
std::vector<EnvConfiguration> enumerate_configs(const EnvironmentSpec& spec,
                                                double g = 1.0);

/// The exact configuration-averaged reduced state: a mixture of |psi+><psi+|
/// and |00><00| with weights 2^{-A} sum_m sin^2/cos^2(Omega_1^(m) t),
/// sin^2 on |psi+> for ground_atoms_one_photon and role-swapped for
/// symmetric_atoms_vacuum.
TwoQubitState reduced_density_analytic(const EnvironmentSpec& spec, double g,
                                       InitKind kind, double gt);

/// Concurrence of reduced_density_analytic, evaluated directly as the
/// configuration average (the mixture family makes them equal):
///   ground_atoms_one_photon: 2^{-A} sum_m sin^2(Omega_1^(m) t),
///   symmetric_atoms_vacuum:  2^{-A} sum_m cos^2(Omega_1^(m) t).
double concurrence_sum(const EnvironmentSpec& spec, double g, InitKind kind,
                       double gt);

struct TraceMeta {
  int A = 0;
  double g = 1.0;
  double g_tilde = 1.0;
  double delta_mean = 0.0;
  double delta_std = 0.0;
  std::uint64_t seed = 0;
  InitKind init = InitKind::ground_atoms_one_photon;
  std::vector<double> deltas;
  std::vector<std::string> warnings;  // non-fatal regime notices
};

struct ConcurrenceTrace {
  std::vector<double> gt;
  std::vector<double> values;
  TraceMethod method = TraceMethod::analytic_sum;
  TraceMeta meta;
};

/// concurrence_sum over a grid (parallel over grid points, fixed-order
/// configuration reduction — bit-identical for any worker count).
ConcurrenceTrace concurrence_trace_sum(const EnvironmentSpec& spec, double g,
                                       InitKind kind,
                                       const std::vector<double>& gt_grid);

/// Full-space evolution trace: evolve, reduce to the resonant pair, apply the
/// concurrence. method selects the full or the simplified-effective
/// Hamiltonian. exact_full is guarded at A <= 8 and requires n_max >= A + 1;
/// n_max_override < 0 means the default cutoff A + 1.
ConcurrenceTrace concurrence_trace_exact(const EnvironmentSpec& spec, double g,
                                         InitKind kind,
                                         const std::vector<double>& gt_grid,
                                         TraceMethod method,
                                         int n_max_override = -1);

/// Seeded Monte Carlo estimate of the configuration sum (the A > 24 pathway);
/// samples configurations uniformly and averages sin^2/cos^2(Omega t).
double concurrence_sum_mc(const EnvironmentSpec& spec, double g, InitKind kind,
                          double gt, int samples, std::uint64_t seed);

ConcurrenceTrace concurrence_trace_mc(const EnvironmentSpec& spec, double g,
                                      InitKind kind,
                                      const std::vector<double>& gt_grid,
                                      int samples, std::uint64_t seed);

/// Max elementwise deviation between the reduced two-qubit states of the
/// full-Hamiltonian and simplified-effective evolutions over a grid. With
/// frame_corrected the effective evolution is conjugated by the dressing
/// unitary (V^dag exp(-i H_eff t) V), which isolates the second-order
/// truncation error; without it the comparison is dominated by the first-order
/// dressing of the initial state.
double effective_vs_full_deviation(const EnvironmentSpec& spec, double g,
                                   InitKind kind,
                                   const std::vector<double>& gt_grid,
                                   bool frame_corrected,
                                   int n_max_override = -1);

}  // namespace dickeenv
