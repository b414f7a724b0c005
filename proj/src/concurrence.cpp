#include "dickeenv/concurrence.hpp"

#include <algorithm>
#include <cmath>

namespace dickeenv {

namespace {

const ComplexMatrix& sigma_y_pair() {
  // sigma_y x sigma_y is invariant under reversing both qubit basis orders,
  // so the excited-first convention needs no special-casing.
  static const ComplexMatrix syy = [] {
    ComplexMatrix sy = ComplexMatrix::Zero(2, 2);
    sy(0, 1) = Complex(0.0, -1.0);
    sy(1, 0) = Complex(0.0, 1.0);
    return kron(sy, sy).eval();
  }();
  return syy;
}

}  // namespace

DensityMatrix spin_flip(const TwoQubitState& state) {
  const ComplexMatrix& syy = sigma_y_pair();
  return DensityMatrix{syy * state.rho.rho.conjugate() * syy};
}

double wootters_concurrence(const TwoQubitState& state) {
  const DensityMatrix flipped = spin_flip(state);

  // sqrt(rho) via Hermitian eigendecomposition, clamping eigenvalue noise.
  const EigenSystem es = eig_hermitian(state.rho.rho);
  RealVector roots(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    roots(i) = std::sqrt(std::max(0.0, es.values(i)));
  }
  const ComplexMatrix sqrt_rho =
      es.vectors * roots.asDiagonal() * es.vectors.adjoint();

  const ComplexMatrix r2 = sqrt_rho * flipped.rho * sqrt_rho;
  const EigenSystem es2 = eig_hermitian(r2);

  // Rank-deficient states put exact zeros in r2's spectrum; eigensolver noise
  // of order eps_mach would come back as sqrt(noise) ~ 1e-8, so values below
  // the noise floor are treated as exact zeros before the square root.
  constexpr double kRankNoise = 1e-14;
  double c = 0.0;
  for (Eigen::Index i = 0; i < es2.values.size(); ++i) {
    const double v = es2.values(i);
    const double lambda = v > kRankNoise ? std::sqrt(v) : 0.0;
    c += (i == 0) ? lambda : -lambda;
  }
  return std::clamp(std::max(0.0, c), 0.0, 1.0);
}

StateVector symmetric_bell_state() {
  StateVector psi = StateVector::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);  // |10>
  psi(2) = 1.0 / std::sqrt(2.0);  // |01>
  return psi;
}

TwoQubitState psi_plus_mixture(double w_psi, double w00, double w11) {
  if (std::abs(w_psi + w00 + w11 - 1.0) > 1e-12) {
    throw Error("psi_plus_mixture: weights must sum to 1");
  }
  const StateVector psi = symmetric_bell_state();
  ComplexMatrix rho = w_psi * (psi * psi.adjoint());
  rho(3, 3) += w00;  // |00><00|
  rho(0, 0) += w11;  // |11><11|
  return TwoQubitState{DensityMatrix{rho}};
}

}  // namespace dickeenv
