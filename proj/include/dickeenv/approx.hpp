#pragma once

#include <vector>

#include "dickeenv/env_dynamics.hpp"

namespace dickeenv {

/// Leading-order moments of eps_j = g_tilde / Delta_j under Gaussian
/// detunings (mean delta_mean, std delta_std):
///   eps_mean  ~= (g_tilde/Dm)(1 + Ds^2/Dm^2),   eps_std  ~= g_tilde Ds / Dm^2,
///   eps2_mean ~= (g_tilde^2/Dm^2)(1 + 3Ds^2/Dm^2), eps2_std ~= 2 g_tilde^2 Ds / Dm^3.
struct EpsilonStats {
  double eps_mean = 0.0;
  double eps_std = 0.0;
  double eps2_mean = 0.0;
  double eps2_std = 0.0;
};

/// Throws InvalidRegime when delta_mean < 5 delta_std (the expansion in
/// Ds/Dm is no longer controlled).
EpsilonStats epsilon_stats(double g_tilde, double delta_mean, double delta_std);

/// Inputs of the approximation chain: resonant coupling g, environment
/// coupling g_tilde, and the detuning distribution, all in one unit system.
struct ApproxParams {
  double g = 1.0;
  double g_tilde = 1.0;
  double delta_mean = 10.0;
  double delta_std = 0.0;
  int A = 1;
};

/// One class of environment configurations: the C(A,k) sign vectors with k
/// positive components share a Rabi frequency to leading order.
struct PeakClass {
  int k = 0;
  double weight = 0.0;      // C(A,k) / 2^A
  double omega = 0.0;       // class frequency Omega_k (carries the factor g)
  double width = 0.0;       // delta_k; exactly 0 for k = 0 and k = A
  double separation = 0.0;  // d_k, distance to the (k+1)-th class
};

/// The A+1-peak decomposition of the Rabi-frequency distribution:
///   Omega_k ~= sqrt(2) g [1 + (gt^2/Dm^2)(k-A/2)(1 + (gt^2/4g^2)(k-A/2))],
///   d_k = sqrt(2) g [gt^2/Dm^2 + (gt^4/(4g^2 Dm^2))(2k-A+1)],
///   delta_k = sqrt(2) g [1 + (k-A/2) + (gt^2/4g^2)(k-A/2)^2] sigma_{eps2,k},
/// with sigma_{eps2,k} = eps2_std sqrt(k(A-k)/(A-1)) (0 when k(A-k) = 0).
struct PeakDecomposition {
  int A = 0;
  std::vector<PeakClass> classes;  // k = 0 .. A
};

PeakDecomposition peak_decomposition(const ApproxParams& params);

/// The two closed forms built on the peak decomposition:
///   binomial_sum:   C ~= 1/2 [1 -/+ 2^{-A} sum_k C(A,k) cos(2 Omega_k t)],
///   gaussian_train: C ~= 1/2 -/+ Re[ Dm^2 e^{2 sqrt2 i gt} / (2 gt~^2 sqrt(2A) sigma)
///                        * sum_k exp(-(gt - pi k Dm^2/(sqrt2 gt~^2))^2 / (2 sigma^2)) ],
/// with the complex width sigma^2 = Dm^4/(2 gt~^4 A) - i t sqrt2 Dm^2/(8g).
/// The upper sign belongs to ground_atoms_one_photon (the sin^2 family).
enum class GaussianVariant { binomial_sum, gaussian_train };

/// Evaluates either variant over the grid. Outside the narrow-peak regime
/// (delta_std >= delta_mean/sqrt(A)) the trace is still produced and a
/// notice is appended to meta.warnings.
ConcurrenceTrace concurrence_gaussian(
    const ApproxParams& params, InitKind kind,
    const std::vector<double>& gt_grid,
    GaussianVariant variant = GaussianVariant::gaussian_train);

/// gt_c ~ Dm^2/(sqrt(A) gt~^2) and gt_R ~ pi k Dm^2/(sqrt2 gt~^2), k = 1..k_max
/// (order-of-magnitude estimates; the tilde'd symbols are ratios to g_tilde).
struct CollapseRevivalTimes {
  double gt_collapse = 0.0;
  std::vector<double> gt_revivals;
};

CollapseRevivalTimes collapse_revival_times(const ApproxParams& params,
                                            int k_max = 3);

/// Collapse/revival times in seconds for laboratory couplings given as
/// ordinary (non-angular) frequencies: t = gt / (2 pi g_hz).
struct FeasibilityReport {
  double t_collapse_s = 0.0;
  std::vector<double> t_revivals_s;
};

FeasibilityReport physical_feasibility(double g_hz, double delta_mean_hz,
                                       double g_tilde_hz, int A, int k_max = 1);

/// Sliding-window maximum |window_gt| wide, used to extract the
/// collapse-revival envelope from a fast-oscillating trace. One
/// fast-oscillation period is pi/sqrt(2) in gt.
std::vector<double> envelope_windowed_max(const std::vector<double>& gt,
                                          const std::vector<double>& values,
                                          double window_gt);

/// Exact C(n, k) as a double (n up to a few hundred).
double binomial_coefficient(int n, int k);

}  // namespace dickeenv
