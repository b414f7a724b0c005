#include "dickeenv/env_model.hpp"

#include <cmath>

#include "dickeenv/rng.hpp"

namespace dickeenv {

namespace {

void check_layout(const EnvironmentSpec& spec, const SystemLayout& layout) {
  if (layout.num_env != spec.A) {
    throw DimensionMismatch("layout has " + std::to_string(layout.num_env) +
                            " environment atoms, spec has " + std::to_string(spec.A));
  }
  if (layout.n_max < 1) {
    throw CutoffTooSmall("photon cutoff must admit at least one photon");
  }
}

std::string constraint_violation(const std::vector<double>& deltas, double g_tilde,
                                 double g, double gap_factor) {
  for (std::size_t j = 0; j < deltas.size(); ++j) {
    if (!(deltas[j] > 0.0)) {
      return "detuning " + std::to_string(j + 1) + " is not positive";
    }
    if (g_tilde / deltas[j] > kEpsilonHardBound) {
      return "epsilon_" + std::to_string(j + 1) + " = " +
             std::to_string(g_tilde / deltas[j]) + " exceeds dispersive bound " +
             std::to_string(kEpsilonHardBound);
    }
  }
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    for (std::size_t j = i + 1; j < deltas.size(); ++j) {
      if (std::abs(deltas[i] - deltas[j]) < gap_factor * g) {
        return "pairwise gap |delta_" + std::to_string(i + 1) + " - delta_" +
               std::to_string(j + 1) + "| = " +
               std::to_string(std::abs(deltas[i] - deltas[j])) + " below " +
               std::to_string(gap_factor * g);
      }
    }
  }
  return {};
}

}  // namespace

EnvironmentSpec EnvironmentSpec::make(int A, double g_tilde, std::vector<double> deltas,
                                      double g, double gap_factor) {
  if (A < 0 || static_cast<int>(deltas.size()) != A) {
    throw DimensionMismatch("EnvironmentSpec: expected " + std::to_string(A) +
                            " detunings, got " + std::to_string(deltas.size()));
  }
  if (!(g_tilde > 0.0) || !(g > 0.0)) {
    throw ConstraintUnsatisfiable("EnvironmentSpec: couplings must be positive");
  }
  const std::string violation = constraint_violation(deltas, g_tilde, g, gap_factor);
  if (!violation.empty()) {
    throw ConstraintUnsatisfiable("EnvironmentSpec: " + violation);
  }
  EnvironmentSpec spec;
  spec.A = A;
  spec.g_tilde = g_tilde;
  spec.deltas = std::move(deltas);
  spec.gap_factor = gap_factor;
  spec.epsilons.reserve(A);
  for (double d : spec.deltas) {
    const double eps = g_tilde / d;
    spec.epsilons.push_back(eps);
    if (eps > kEpsilonWarnBound) {
      spec.warnings.push_back("epsilon = " + std::to_string(eps) +
                              " above dispersive warn bound " +
                              std::to_string(kEpsilonWarnBound));
    }
  }
  return spec;
}

EnvConfiguration make_config(const EnvironmentSpec& spec, double g, std::uint32_t index) {
  EnvConfiguration cfg;
  cfg.index = index;
  cfg.s.resize(spec.A);
  double y_half = 0.0, lam = 1.0;
  for (int j = 0; j < spec.A; ++j) {
    const double sj = (index >> j & 1u) ? 0.5 : -0.5;
    cfg.s[j] = sj;
    y_half += spec.g_tilde * spec.epsilons[j] * sj;
    lam += spec.epsilons[j] * spec.epsilons[j] * sj;
  }
  cfg.y_half = y_half;
  cfg.lambda = lam;
  cfg.omega1 = std::sqrt(y_half * y_half + 2.0 * g * g * lam * lam);
  return cfg;
}

namespace {

// Small single-factor blocks; products with other factors are assembled by
// embed_blocks so no full-dimension matrix product is ever formed.
ComplexMatrix field_ladder(int n_max) {
  ComplexMatrix a = ComplexMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

// a s_+ + a^dag s_- acting on (field factor, atom factor of `site`).
ComplexMatrix exchange_term(const SystemLayout& layout, const ComplexMatrix& a,
                            int site) {
  const int f = layout.atom_factor(site);
  return embed_blocks(layout, {{SystemLayout::kFieldFactor, a},
                               {f, qubit_sigma_plus()}}) +
         embed_blocks(layout, {{SystemLayout::kFieldFactor, a.adjoint()},
                               {f, qubit_sigma_minus()}});
}

}  // namespace

ComplexMatrix full_hamiltonian(const EnvironmentSpec& spec, double g,
                               const SystemLayout& layout) {
  check_layout(spec, layout);
  const ComplexMatrix a = field_ladder(layout.n_max);

  ComplexMatrix h = ComplexMatrix::Zero(layout.dim(), layout.dim());
  for (int i = 0; i < 2; ++i) {
    h += g * exchange_term(layout, a, i);
  }
  for (int j = 0; j < spec.A; ++j) {
    const int site = 2 + j;
    h += spec.deltas[j] * spin_operator(layout, SpinKind::z, site);
    h += spec.g_tilde * exchange_term(layout, a, site);
  }
  return h;
}

ComplexMatrix effective_hamiltonian(const EnvironmentSpec& spec, double g,
                                    const SystemLayout& layout, bool keep_dipolar) {
  check_layout(spec, layout);
  const int dim = layout.dim();
  const ComplexMatrix a = field_ladder(layout.n_max);
  ComplexMatrix one_plus_2n = ComplexMatrix::Zero(layout.n_max + 1, layout.n_max + 1);
  for (int n = 0; n <= layout.n_max; ++n) one_plus_2n(n, n) = 1.0 + 2.0 * n;

  // Dynamic Stark shifts of the environment atoms; lambda_hat is diagonal, so
  // it is kept as a vector and applied to the coupling without a dense product.
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  Eigen::VectorXcd lambda_hat = Eigen::VectorXcd::Ones(dim);
  for (int j = 0; j < spec.A; ++j) {
    const int site = 2 + j;
    const int f = layout.atom_factor(site);
    const double eps = spec.epsilons[j];
    h += spec.g_tilde * eps *
         embed_blocks(layout, {{SystemLayout::kFieldFactor, one_plus_2n},
                               {f, qubit_sz()}});
    lambda_hat += eps * eps * spin_operator(layout, SpinKind::z, site).diagonal();
    if (keep_dipolar) {
      h += spec.deltas[j] * spin_operator(layout, SpinKind::z, site);
    }
  }

  // Dressed resonant coupling lambda_hat * sum_i g (a s_+i + a^dag s_-i);
  // lambda_hat commutes with the coupling, so the product stays Hermitian.
  ComplexMatrix coupling = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < 2; ++i) {
    coupling += g * exchange_term(layout, a, i);
  }
  h += lambda_hat.asDiagonal() * coupling;

  if (keep_dipolar) {
    // Cross-exchange between environment atoms, Hermitized coefficient
    // (eps_i + eps_j)/2 in place of the asymmetric eps_j.
    for (int i = 0; i < spec.A; ++i) {
      for (int j = 0; j < spec.A; ++j) {
        const double coeff =
            0.25 * spec.g_tilde * (spec.epsilons[i] + spec.epsilons[j]);
        if (i == j) {
          // s_-i s_+i + s_+i s_-i is the identity on the qubit factor.
          h += coeff * ComplexMatrix::Identity(dim, dim);
          continue;
        }
        const int fi = layout.atom_factor(2 + i);
        const int fj = layout.atom_factor(2 + j);
        h += coeff *
             (embed_blocks(layout, {{fi, qubit_sigma_minus()},
                                    {fj, qubit_sigma_plus()}}) +
              embed_blocks(layout, {{fi, qubit_sigma_plus()},
                                    {fj, qubit_sigma_minus()}}));
      }
    }
  }
  return h;
}

ComplexMatrix closed_form_u(const EnvironmentSpec& spec, double g, int n_sector,
                            const EnvConfiguration& config, double gt) {
  if (n_sector != 1) {
    throw InvalidSector("closed_form_u: only the one-excitation sector is available");
  }
  if (static_cast<int>(config.s.size()) != spec.A) {
    throw DimensionMismatch("closed_form_u: configuration does not match spec");
  }
  const double t = gt / g;
  const double omega = config.omega1;
  const double y_half = config.y_half;
  const double l1 = std::sin(omega * t) / omega;
  const Complex a1 = Complex(std::cos(omega * t), y_half * l1);
  const Complex phase = std::exp(Complex(0.0, -y_half * t));
  const Complex y0 = 0.5 * (1.0 + phase * a1);

  ComplexMatrix u(3, 3);
  u(0, 0) = phase * std::conj(a1);
  const Complex hop = Complex(0.0, -1.0) * g * config.lambda * l1 * phase;
  u(0, 1) = u(0, 2) = u(1, 0) = u(2, 0) = hop;
  u(1, 1) = u(2, 2) = y0;
  u(1, 2) = u(2, 1) = y0 - 1.0;
  return u;
}

SectorIndices sector_indices(const SystemLayout& layout, std::uint32_t config_index) {
  const int A = layout.num_env;
  const int env_dim = 1 << A;
  // Factor index 0 = excited within each env qubit; bit j-1 of config_index
  // set means env atom j is excited. env atom 1 is the slowest env factor.
  int env_idx = 0;
  for (int j = 0; j < A; ++j) {
    const int factor_idx = (config_index >> j & 1u) ? 0 : 1;
    env_idx += factor_idx << (A - 1 - j);
  }
  const int field_dim = layout.n_max + 1;
  auto full = [&](int ia, int ib, int nph) {
    return ((ia * 2 + ib) * field_dim + nph) * env_dim + env_idx;
  };
  // Qubit index 1 = ground, 0 = excited.
  return SectorIndices{full(1, 1, 1), full(0, 1, 0), full(1, 0, 0)};
}

std::vector<double> draw_detunings(double delta_mean, double delta_std, int A,
                                   std::uint64_t seed, double g_tilde, double g,
                                   double gap_factor, int max_retries) {
  if (!(delta_mean > 0.0) || delta_std < 0.0) {
    throw ConstraintUnsatisfiable("draw_detunings: need delta_mean > 0 and delta_std >= 0");
  }
  if (delta_mean < 5.0 * delta_std) {
    throw ConstraintUnsatisfiable(
        "draw_detunings: delta_mean < 5 delta_std leaves the positive dispersive "
        "regime unreachable");
  }
  GaussianDraw rng(seed);
  std::vector<double> deltas(A);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    for (int j = 0; j < A; ++j) deltas[j] = rng(delta_mean, delta_std);
    if (constraint_violation(deltas, g_tilde, g, gap_factor).empty()) {
      return deltas;
    }
  }
  throw ConstraintUnsatisfiable(
      "draw_detunings: no admissible draw within " + std::to_string(max_retries) +
      " attempts (A = " + std::to_string(A) + ", delta_mean = " +
      std::to_string(delta_mean) + ", delta_std = " + std::to_string(delta_std) +
      ", gap_factor = " + std::to_string(gap_factor) + ")");
}

EnvironmentSpec drawn_environment(double delta_mean, double delta_std, int A,
                                  std::uint64_t seed, double g_tilde, double g,
                                  double gap_factor) {
  const std::vector<double> deltas =
      draw_detunings(delta_mean, delta_std, A, seed, g_tilde, g, gap_factor);
  EnvironmentSpec spec = EnvironmentSpec::make(A, g_tilde, deltas, g, gap_factor);
  spec.seed = seed;
  spec.delta_mean = delta_mean;
  spec.delta_std = delta_std;
  return spec;
}

ComplexMatrix frame_dressing(const EnvironmentSpec& spec, const SystemLayout& layout) {
  check_layout(spec, layout);
  const int dim = layout.dim();
  const ComplexMatrix a = field_ladder(layout.n_max);
  ComplexMatrix b = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < spec.A; ++j) {
    const int f = layout.atom_factor(2 + j);
    b += spec.epsilons[j] *
         (embed_blocks(layout, {{SystemLayout::kFieldFactor, a},
                                {f, qubit_sigma_plus()}}) -
          embed_blocks(layout, {{SystemLayout::kFieldFactor, a.adjoint()},
                                {f, qubit_sigma_minus()}}));
  }
  // B is anti-Hermitian, so exp(B) = exp(-i (iB)) with iB Hermitian.
  const ComplexMatrix ib = Complex(0.0, 1.0) * b;
  return Propagator(ib).unitary(1.0);
}

}  // namespace dickeenv
