#pragma once

#include <utility>
#include <vector>

#include "dickeenv/linalg.hpp"

namespace dickeenv {

/// Composite space of the two resonant atoms, the cavity mode, and A
/// dispersive environment atoms. Factor ordering is frozen as
/// [atom a, atom b, field, env 1 ... env A]; within every qubit factor the
/// excited state is basis index 0 (so the two-qubit block reads
/// |11>, |10>, |01>, |00> in row-major order).
struct SystemLayout {
  int n_max;    // photon cutoff; field dimension n_max + 1
  int num_env;  // A >= 0

  static constexpr int kNumResonant = 2;

  SystemLayout(int n_max_, int num_env_) : n_max(n_max_), num_env(num_env_) {
    if (n_max < 0 || num_env < 0) {
      throw DimensionMismatch("SystemLayout: n_max and A must be non-negative");
    }
  }

  TensorLayout tensor() const {
    std::vector<int> dims = {2, 2, n_max + 1};
    dims.insert(dims.end(), num_env, 2);
    return TensorLayout{dims};
  }
  int dim() const { return 4 * (n_max + 1) * (1 << num_env); }
  int num_factors() const { return 3 + num_env; }

  /// Tensor-factor index of an atom site: 0 = a, 1 = b, 2.. = env atom (site-2+1).
  int atom_factor(int site) const {
    const int f = site < 2 ? site : site + 1;
    if (site < 0 || f >= num_factors()) {
      throw InvalidFactorIndex("atom site " + std::to_string(site) + " out of range");
    }
    return f;
  }
  static constexpr int kFieldFactor = 2;
};

enum class SpinKind { plus, minus, z };
enum class FieldKind { create, annihilate, number };

/// Product of single-factor operators, given as (tensor factor, block) pairs
/// with identity on every unnamed factor. Built in one Kronecker pass, so a
/// term like a s_+j costs O(dim^2) instead of a dense dim^3 matrix product.
ComplexMatrix embed_blocks(
    const SystemLayout& layout,
    const std::vector<std::pair<int, ComplexMatrix>>& blocks);

/// s_{+,-,z} of one atom, embedded in the full space by Kronecker products
/// with identities. s_z has eigenvalues +1/2 (excited) and -1/2 (ground);
/// [s_{+i}, s_{-j}] = 2 s_{zi} delta_ij.
ComplexMatrix spin_operator(const SystemLayout& layout, SpinKind which, int site);

/// Truncated ladder/number operators of the cavity mode: a|n> = sqrt(n)|n-1>,
/// a^dag|n> = sqrt(n+1)|n+1> (annihilating past the cutoff gives 0).
ComplexMatrix field_operator(const SystemLayout& layout, FieldKind which);

/// Total excitation number N = a^dag a + sum_j s_zj over all atoms; commutes
/// with every interaction Hamiltonian in this library.
ComplexMatrix excitation_number(const SystemLayout& layout);

/// Positive-semidefinite unit-trace operator. Invariants are checked by
/// validate(); construction from a pure state guarantees them structurally.
struct DensityMatrix {
  ComplexMatrix rho;

  int dim() const { return static_cast<int>(rho.rows()); }

  /// Checks Hermiticity (1e-10), unit trace (1e-10), and min eigenvalue
  /// >= -1e-9. Throws Error with a diagnostic on violation.
  void validate() const;
};

/// rho = |psi><psi|. Throws UnnormalizedState when | ||psi|| - 1 | > 1e-8.
DensityMatrix pure_density(const StateVector& psi);

// Single-factor 2x2 blocks (excited = index 0) used by the embeddings.
ComplexMatrix qubit_sigma_plus();
ComplexMatrix qubit_sigma_minus();
ComplexMatrix qubit_sz();

/// Basis vector |idx> of dimension dim.
StateVector basis_state(int dim, int idx);

}  // namespace dickeenv
