#pragma once

#include "dickeenv/quantum.hpp"

namespace dickeenv {

/// Two-qubit density matrix of the resonant pair, basis ordered
/// |11>, |10>, |01>, |00> (excited = index 0 within each qubit factor).
struct TwoQubitState {
  DensityMatrix rho;

  TwoQubitState() : rho{ComplexMatrix::Zero(4, 4)} {}
  explicit TwoQubitState(DensityMatrix d) : rho(std::move(d)) {
    if (rho.dim() != 4) {
      throw DimensionMismatch("TwoQubitState: density matrix must be 4x4");
    }
  }
};

/// Spin-flipped state rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y),
/// with * the elementwise conjugate in the computational basis.
DensityMatrix spin_flip(const TwoQubitState& state);

/// Wootters concurrence C = max(0, l1 - l2 - l3 - l4), where l_i are the
/// descending square roots of the eigenvalues of rho rho~. Evaluated through
/// the Hermitian equivalent sqrt(rho) rho~ sqrt(rho) so only self-adjoint
/// eigensolves are needed. Result clamped to [0, 1].
double wootters_concurrence(const TwoQubitState& state);

/// |psi+> = (|01> + |10>)/sqrt(2) in the two-qubit basis above.
StateVector symmetric_bell_state();

/// Mixture p |psi+><psi+| + w00 |00><00| + w11 |11><11| (the family every
/// reduced state in this library belongs to); weights must sum to 1.
TwoQubitState psi_plus_mixture(double w_psi, double w00, double w11);

}  // namespace dickeenv
