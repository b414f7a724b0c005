#include "dickeenv/dicke.hpp"

#include <algorithm>
#include <cmath>

#include "dickeenv/parallel.hpp"

namespace dickeenv {

ComplexMatrix tc_hamiltonian(const DickeParams& params, const SystemLayout& layout) {
  if (layout.num_env != 0) {
    throw DimensionMismatch("tc_hamiltonian: layout must have zero environment atoms");
  }
  if (layout.n_max < params.n) {
    throw CutoffTooSmall("tc_hamiltonian: n_max = " + std::to_string(layout.n_max) +
                         " < initial photon number " + std::to_string(params.n));
  }
  const ComplexMatrix a = field_operator(layout, FieldKind::annihilate);
  const ComplexMatrix ad = field_operator(layout, FieldKind::create);
  const ComplexMatrix sp = spin_operator(layout, SpinKind::plus, 0) +
                           spin_operator(layout, SpinKind::plus, 1);
  const ComplexMatrix sm = spin_operator(layout, SpinKind::minus, 0) +
                           spin_operator(layout, SpinKind::minus, 1);
  return params.g * (a * sp + ad * sm);
}

namespace {

struct RabiWeights {
  double w00, wpsi, w11;
};

RabiWeights rabi_weights(int n, double c, double s) {
  const double d = 2.0 * n - 1.0;
  RabiWeights w;
  w.w00 = (n * c + (n - 1.0)) * (n * c + (n - 1.0)) / (d * d);
  w.wpsi = n * s * s / d;
  w.w11 = n * (n - 1.0) * (1.0 - c) * (1.0 - c) / (d * d);
  return w;
}

}  // namespace

TwoQubitState analytic_rho_ab(const DickeParams& params, double gt) {
  if (params.n == 0) {
    return psi_plus_mixture(0.0, 1.0, 0.0);
  }
  const double phase = std::sqrt(2.0 * (2.0 * params.n - 1.0)) * gt;
  const RabiWeights w = rabi_weights(params.n, std::cos(phase), std::sin(phase));
  return psi_plus_mixture(w.wpsi, w.w00, w.w11);
}

namespace {

// Concurrence as a function of x = cos(sqrt(2(2n-1)) gt), n >= 1:
//   f(x) = n(1-x^2)/(2n-1) - 2 sqrt(n(n-1))/(2n-1)^2 |nx+n-1| (1-x).
double conc_of_x(int n, double x) {
  const double d = 2.0 * n - 1.0;
  const double k = std::sqrt(n * (n - 1.0));
  const double s2 = 1.0 - x * x;
  return n * s2 / d - 2.0 * k / (d * d) * std::abs(n * x + n - 1.0) * std::abs(1.0 - x);
}

}  // namespace

double analytic_concurrence(const DickeParams& params, double gt) {
  if (params.n == 0) return 0.0;
  const double phase = std::sqrt(2.0 * (2.0 * params.n - 1.0)) * gt;
  return std::max(0.0, conc_of_x(params.n, std::cos(phase)));
}

double max_concurrence_over_time(const DickeParams& params) {
  const int n = params.n;
  if (n == 0) return 0.0;
  const double d = 2.0 * n - 1.0;
  const double k = std::sqrt(n * (n - 1.0));
  // Over x >= -(n-1)/n the function is the concave quadratic
  //   [n(2k - d) x^2 - 2k x + (n d - 2k(n-1))] / d^2
  // with vertex x* = k / (n (2k - d)); below the kink it is concave with its
  // vertex right of the kink, so candidates are the kink, the vertex when it
  // lies in range, and the interval endpoints.
  const double kink = -(n - 1.0) / n;
  double best = std::max(conc_of_x(n, -1.0), std::max(conc_of_x(n, kink), conc_of_x(n, 1.0)));
  if (k > 0.0) {
    const double vertex = k / (n * (2.0 * k - d));
    if (vertex >= kink && vertex <= 1.0) {
      best = std::max(best, conc_of_x(n, vertex));
    }
  } else {
    best = std::max(best, conc_of_x(n, 0.0));  // n = 1: plain 1 - x^2
  }
  return std::max(0.0, best);
}

std::vector<HeatmapCell> concurrence_heatmap(int n_lo, int n_hi,
                                             const std::vector<double>& gt_grid,
                                             double g) {
  if (n_hi < n_lo || gt_grid.empty()) {
    throw Error("concurrence_heatmap: empty n range or grid");
  }
  const std::size_t rows = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<HeatmapCell> cells(rows * gt_grid.size());
  parallel_for(rows, [&](std::size_t r) {
    const int n = n_lo + static_cast<int>(r);
    const DickeParams p{g, n};
    for (std::size_t c = 0; c < gt_grid.size(); ++c) {
      cells[r * gt_grid.size() + c] = {n, gt_grid[c], analytic_concurrence(p, gt_grid[c])};
    }
  });
  return cells;
}

}  // namespace dickeenv
