#pragma once

#include <vector>

#include "dickeenv/concurrence.hpp"

namespace dickeenv {

/// Environment-free resonant pair: coupling g and initial photon number n.
/// All public time arguments are the dimensionless product gt.
struct DickeParams {
  double g = 1.0;
  int n = 1;
};

/// Resonant Tavis-Cummings Hamiltonian H = g{a(s+a + s+b) + a^dag(s-a + s-b)}
/// on a layout with zero environment atoms. Throws CutoffTooSmall when the
/// photon cutoff cannot hold the initial |n> state.
ComplexMatrix tc_hamiltonian(const DickeParams& params, const SystemLayout& layout);

/// Reduced two-qubit state at time gt for the |0>_a|0>_b|n> initial
/// condition: a mixture of |00><00|, |psi+><psi+| and |11><11| with weights
///   w00  = [n C + (n-1)]^2 / (2n-1)^2,
///   wpsi = n S^2 / (2n-1),
///   w11  = n(n-1) [1 - C]^2 / (2n-1)^2,
/// where C = cos(sqrt(2(2n-1)) gt), S = sin(...). n = 0 stays |00><00|.
TwoQubitState analytic_rho_ab(const DickeParams& params, double gt);

/// Closed-form concurrence of analytic_rho_ab:
///   C = max(0, n S^2/(2n-1) - 2 sqrt(n(n-1))/(2n-1)^2 |nC+n-1| |1-C|),
/// which reduces to sin^2(sqrt(2) gt) for n = 1 and to 0 for n = 0.
double analytic_concurrence(const DickeParams& params, double gt);

/// Exact maximum of analytic_concurrence over all times. The formula depends
/// on time only through x = cos(sqrt(2(2n-1)) gt) in [-1, 1] and is piecewise
/// quadratic in x, so the maximum is found from vertex/endpoint candidates in
/// closed form (no time grid involved).
double max_concurrence_over_time(const DickeParams& params);

struct HeatmapCell {
  int n;
  double gt;
  double concurrence;
};

/// analytic_concurrence tabulated over an (n, gt) grid; rows are computed in
/// parallel, output ordering deterministic (n-major, gt-minor).
std::vector<HeatmapCell> concurrence_heatmap(int n_lo, int n_hi,
                                             const std::vector<double>& gt_grid,
                                             double g = 1.0);

}  // namespace dickeenv
