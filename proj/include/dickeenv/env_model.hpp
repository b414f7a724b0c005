#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dickeenv/quantum.hpp"

namespace dickeenv {

inline constexpr double kEpsilonHardBound = 0.3;   // dispersive validity, enforced
inline constexpr double kEpsilonWarnBound = 0.1;   // dispersive validity, warned
inline constexpr double kDefaultGapFactor = 5.0;   // pairwise |delta_i - delta_j| >= gap_factor * g
inline constexpr int kDrawMaxRetries = 1000;

/// The dispersive environment: A atoms with common field coupling g_tilde and
/// individual detunings delta_j, plus the provenance of a random draw (seed,
/// mean, std) when the detunings came from draw_detunings.
struct EnvironmentSpec {
  int A = 0;
  double g_tilde = 1.0;
  std::vector<double> deltas;     // size A, all positive
  std::vector<double> epsilons;   // derived: g_tilde / delta_j

  // Draw provenance (zero/empty when constructed from explicit detunings).
  std::uint64_t seed = 0;
  double delta_mean = 0.0;
  double delta_std = 0.0;
  double gap_factor = kDefaultGapFactor;

  // Non-fatal diagnostics (epsilon above the warn bound).
  std::vector<std::string> warnings;

  /// Validating constructor. Throws ConstraintUnsatisfiable when a detuning
  /// is non-positive, an epsilon exceeds the hard dispersive bound, or a
  /// pairwise gap falls below gap_factor * g.
  static EnvironmentSpec make(int A, double g_tilde, std::vector<double> deltas,
                              double g = 1.0, double gap_factor = kDefaultGapFactor);
};

/// One environment configuration: a sign vector s in {-1/2,+1/2}^A encoded by
/// the bits of `index` (bit j-1 set means atom j has s_j = +1/2), with its
/// derived quantities
///   y_half = sum_j g_tilde eps_j s_j,
///   lambda = 1 + sum_j eps_j^2 s_j,
///   omega1 = sqrt(y_half^2 + 2 g^2 lambda^2)   (one-excitation Rabi frequency).
struct EnvConfiguration {
  std::uint32_t index = 0;
  std::vector<double> s;
  double y_half = 0.0;
  double lambda = 1.0;
  double omega1 = 0.0;
};

EnvConfiguration make_config(const EnvironmentSpec& spec, double g, std::uint32_t index);

/// Full interaction Hamiltonian
///   H = sum_j delta_j s_zj + sum_{i=a,b} g (a s_+i + a^dag s_-i)
///     + sum_j g_tilde (a s_+j + a^dag s_-j),
/// which commutes with the total excitation number.
ComplexMatrix full_hamiltonian(const EnvironmentSpec& spec, double g,
                               const SystemLayout& layout);

/// Second-order effective Hamiltonian. With keep_dipolar the faithful form
///   sum_j (delta_j + g_tilde eps_j (1 + 2 a^dag a)) s_zj
///   + lambda_hat sum_{i=a,b} g (a s_+i + a^dag s_-i)
///   + (1/2) sum_{i,j env} g_tilde eps_j (s_-i s_+j + s_+i s_-j)   [Hermitized],
/// lambda_hat = 1 + sum_j eps_j^2 s_zj. Without it, the simplified dispersive
/// form: Stark term plus dressed resonant coupling only (the commuting
/// environment-frequency term and the rapidly oscillating cross-exchange
/// terms are dropped); every env s_zj is then conserved.
ComplexMatrix effective_hamiltonian(const EnvironmentSpec& spec, double g,
                                    const SystemLayout& layout, bool keep_dipolar);

/// Closed-form one-excitation evolution operator for a fixed environment
/// configuration, on the sector basis {|00,1ph>, |10,0ph>, |01,0ph>}:
///   U(1,1) = e^{-i y t/2} A1*,  off-diagonal to/from (1) = -i g lambda L1 e^{-i y t/2},
///   U(2,2) = U(3,3) = Y0,       U(2,3) = U(3,2) = Y0 - 1,
/// with L1 = sin(Omega1 t)/Omega1, A1 = cos(Omega1 t) + i (y/2) L1,
/// Y0 = (1 + e^{-i y t/2} A1)/2. Equals the sector-restricted exponential of
/// the simplified effective Hamiltonian up to the configuration-wide phase
/// e^{-i y t/2}. n_sector must be 1 (InvalidSector otherwise).
ComplexMatrix closed_form_u(const EnvironmentSpec& spec, double g, int n_sector,
                            const EnvConfiguration& config, double gt);

/// Full-space indices of the one-excitation sector basis states for a given
/// environment configuration.
struct SectorIndices {
  int ground_one_photon;   // |00, 1ph>
  int a_excited_vacuum;    // |10, 0ph>
  int b_excited_vacuum;    // |01, 0ph>
};
SectorIndices sector_indices(const SystemLayout& layout, std::uint32_t config_index);

/// Gaussian detunings with mean delta_mean and std delta_std, redrawn until
/// the EnvironmentSpec constraints hold (positivity, epsilon bound, pairwise
/// gaps), deterministically per seed. Throws ConstraintUnsatisfiable when
/// delta_mean < 5 delta_std or after max_retries failed draws.
std::vector<double> draw_detunings(double delta_mean, double delta_std, int A,
                                   std::uint64_t seed, double g_tilde = 1.0,
                                   double g = 1.0,
                                   double gap_factor = kDefaultGapFactor,
                                   int max_retries = kDrawMaxRetries);

/// draw_detunings followed by EnvironmentSpec::make, with the draw provenance
/// (seed, mean, std) recorded in the returned spec.
EnvironmentSpec drawn_environment(double delta_mean, double delta_std, int A,
                                  std::uint64_t seed, double g_tilde = 1.0,
                                  double g = 1.0,
                                  double gap_factor = kDefaultGapFactor);

/// Dressing unitary V = exp(B), B = sum_j eps_j (a s_+j - a^dag s_-j), that
/// relates the full and effective pictures: exp(-iHt) ~ V^dag exp(-iH_eff t) V
/// with an O(eps^2) defect. Used by the validation comparisons; the effective
/// Hamiltonian itself is constructed directly, not by transforming H.
ComplexMatrix frame_dressing(const EnvironmentSpec& spec, const SystemLayout& layout);

}  // namespace dickeenv
