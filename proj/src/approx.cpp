#include "dickeenv/approx.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "dickeenv/parallel.hpp"

namespace dickeenv {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_distribution(double delta_mean, double delta_std, const char* what) {
  if (!(delta_mean > 0.0) || delta_std < 0.0) {
    throw InvalidRegime(std::string(what) +
                        ": need delta_mean > 0 and delta_std >= 0");
  }
  if (delta_mean < 5.0 * delta_std) {
    throw InvalidRegime(std::string(what) +
                        ": delta_mean < 5 delta_std is outside the dispersive "
                        "expansion regime");
  }
}

void check_chain(const ApproxParams& p, const char* what) {
  if (p.A < 1) {
    throw InvalidRegime(std::string(what) + ": need A >= 1");
  }
  if (!(p.g > 0.0) || !(p.g_tilde > 0.0)) {
    throw InvalidRegime(std::string(what) + ": couplings must be positive");
  }
  check_distribution(p.delta_mean, p.delta_std, what);
}

TraceMeta gaussian_meta(const ApproxParams& p, InitKind kind) {
  TraceMeta meta;
  meta.A = p.A;
  meta.g = p.g;
  meta.g_tilde = p.g_tilde;
  meta.delta_mean = p.delta_mean;
  meta.delta_std = p.delta_std;
  meta.init = kind;
  return meta;
}

}  // namespace

double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(c);
}

EpsilonStats epsilon_stats(double g_tilde, double delta_mean, double delta_std) {
  check_distribution(delta_mean, delta_std, "epsilon_stats");
  const double r = g_tilde / delta_mean;
  const double v = delta_std / delta_mean;  // relative spread
  EpsilonStats s;
  s.eps_mean = r * (1.0 + v * v);
  s.eps_std = g_tilde * delta_std / (delta_mean * delta_mean);
  s.eps2_mean = r * r * (1.0 + 3.0 * v * v);
  s.eps2_std = 2.0 * g_tilde * g_tilde * delta_std /
               (delta_mean * delta_mean * delta_mean);
  return s;
}

PeakDecomposition peak_decomposition(const ApproxParams& p) {
  check_chain(p, "peak_decomposition");
  const EpsilonStats stats = epsilon_stats(p.g_tilde, p.delta_mean, p.delta_std);
  const double r = (p.g_tilde * p.g_tilde) / (p.delta_mean * p.delta_mean);
  const double q = (p.g_tilde * p.g_tilde) / (4.0 * p.g * p.g);
  const double sqrt2g = std::sqrt(2.0) * p.g;
  const double norm = std::ldexp(1.0, -p.A);  // 2^{-A}

  PeakDecomposition out;
  out.A = p.A;
  out.classes.resize(static_cast<std::size_t>(p.A) + 1);
  for (int k = 0; k <= p.A; ++k) {
    const double x = k - 0.5 * p.A;
    PeakClass& c = out.classes[static_cast<std::size_t>(k)];
    c.k = k;
    c.weight = binomial_coefficient(p.A, k) * norm;
    c.omega = sqrt2g * (1.0 + r * x * (1.0 + q * x));
    c.separation = sqrt2g * (r + r * q * (2.0 * k - p.A + 1.0));
    const double edge = static_cast<double>(k) * (p.A - k);
    const double sigma_k =
        edge == 0.0 ? 0.0 : stats.eps2_std * std::sqrt(edge / (p.A - 1.0));
    c.width = sqrt2g * (1.0 + x + q * x * x) * sigma_k;
  }
  return out;
}

ConcurrenceTrace concurrence_gaussian(const ApproxParams& p, InitKind kind,
                                      const std::vector<double>& gt_grid,
                                      GaussianVariant variant) {
  check_chain(p, "concurrence_gaussian");
  ConcurrenceTrace trace;
  trace.gt = gt_grid;
  trace.values.resize(gt_grid.size());
  trace.method = TraceMethod::gaussian;
  trace.meta = gaussian_meta(p, kind);
  if (p.delta_std >= p.delta_mean / std::sqrt(double(p.A))) {
    trace.meta.warnings.push_back(
        "narrow-peak regime violated: delta_std >= delta_mean/sqrt(A); the "
        "Gaussian forms are uncontrolled here");
  }
  // Upper sign (minus on the oscillating part) for the sin^2 family.
  const double sign = kind == InitKind::ground_atoms_one_photon ? -1.0 : 1.0;

  if (variant == GaussianVariant::binomial_sum) {
    const PeakDecomposition peaks = peak_decomposition(p);
    parallel_for(gt_grid.size(), [&](std::size_t i) {
      const double t = gt_grid[i] / p.g;
      double osc = 0.0;
      for (const PeakClass& c : peaks.classes) {
        osc += c.weight * std::cos(2.0 * c.omega * t);
      }
      trace.values[i] = 0.5 * (1.0 + sign * osc);
    });
    return trace;
  }

  // Gaussian-train form. All quantities below are expressed in gt units:
  // rdd = delta_mean/g_tilde and rdg = delta_mean/g are the only inputs.
  const double rdd = p.delta_mean / p.g_tilde;
  const double rdg = p.delta_mean / p.g;
  const double step = kPi * rdd * rdd / std::sqrt(2.0);  // revival spacing
  const double base_width = rdd * rdd * rdd * rdd / (2.0 * p.A);
  const auto sigma2_at = [&](double gt) {
    return Complex(base_width, -gt * std::sqrt(2.0) * rdg * rdg / 8.0);
  };
  double gt_lo = 0.0, gt_hi = 0.0;
  for (double gt : gt_grid) {
    gt_lo = std::min(gt_lo, gt);
    gt_hi = std::max(gt_hi, gt);
  }
  const double span = std::max(std::abs(gt_lo), std::abs(gt_hi));
  const double margin = 6.0 * std::sqrt(std::abs(sigma2_at(span)));
  const int k_lo = static_cast<int>(std::ceil((gt_lo - margin) / step));
  const int k_hi = static_cast<int>(std::floor((gt_hi + margin) / step));

  parallel_for(gt_grid.size(), [&](std::size_t i) {
    const double gt = gt_grid[i];
    const Complex sigma2 = sigma2_at(gt);
    const Complex sigma = std::sqrt(sigma2);
    const Complex pref = rdd * rdd *
                         std::exp(Complex(0.0, 2.0 * std::sqrt(2.0) * gt)) /
                         (2.0 * std::sqrt(2.0 * p.A) * sigma);
    Complex sum = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
      const double d = gt - k * step;
      sum += std::exp(-d * d / (2.0 * sigma2));
    }
    trace.values[i] = 0.5 + sign * (pref * sum).real();
  });
  return trace;
}

CollapseRevivalTimes collapse_revival_times(const ApproxParams& p, int k_max) {
  check_chain(p, "collapse_revival_times");
  if (k_max < 1) {
    throw InvalidRegime("collapse_revival_times: need k_max >= 1");
  }
  const double rdd = p.delta_mean / p.g_tilde;
  CollapseRevivalTimes out;
  out.gt_collapse = rdd * rdd / std::sqrt(double(p.A));
  out.gt_revivals.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    out.gt_revivals.push_back(kPi * k * rdd * rdd / std::sqrt(2.0));
  }
  return out;
}

FeasibilityReport physical_feasibility(double g_hz, double delta_mean_hz,
                                       double g_tilde_hz, int A, int k_max) {
  if (!(g_hz > 0.0) || !(delta_mean_hz > 0.0) || !(g_tilde_hz > 0.0)) {
    throw InvalidRegime("physical_feasibility: frequencies must be positive");
  }
  ApproxParams p;
  p.g = 1.0;
  p.g_tilde = g_tilde_hz / g_hz;
  p.delta_mean = delta_mean_hz / g_hz;
  p.delta_std = 0.0;
  p.A = A;
  const CollapseRevivalTimes gt = collapse_revival_times(p, k_max);
  const double to_seconds = 1.0 / (2.0 * kPi * g_hz);
  FeasibilityReport report;
  report.t_collapse_s = gt.gt_collapse * to_seconds;
  report.t_revivals_s.reserve(gt.gt_revivals.size());
  for (double v : gt.gt_revivals) {
    report.t_revivals_s.push_back(v * to_seconds);
  }
  return report;
}

std::vector<double> envelope_windowed_max(const std::vector<double>& gt,
                                          const std::vector<double>& values,
                                          double window_gt) {
  if (gt.size() != values.size()) {
    throw DimensionMismatch("envelope_windowed_max: grid/value size mismatch");
  }
  if (!(window_gt > 0.0)) {
    throw InvalidRegime("envelope_windowed_max: window must be positive");
  }
  const std::size_t n = gt.size();
  std::vector<double> env(n);
  const double half = 0.5 * window_gt;
  std::size_t lo = 0, hi = 0;  // [lo, hi) window; grid assumed ascending
  for (std::size_t i = 0; i < n; ++i) {
    while (lo < n && gt[lo] < gt[i] - half) ++lo;
    if (hi < lo) hi = lo;
    while (hi < n && gt[hi] <= gt[i] + half) ++hi;
    double m = values[lo];
    for (std::size_t j = lo + 1; j < hi; ++j) m = std::max(m, values[j]);
    env[i] = m;
  }
  return env;
}

}  // namespace dickeenv
