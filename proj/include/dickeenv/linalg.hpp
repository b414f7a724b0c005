#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dickeenv/errors.hpp"

namespace dickeenv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-10;

/// Tensor-product structure of a composite Hilbert space: ordered subsystem
/// dimensions, e.g. {2, 2, n_max+1, 2, ..., 2} for the two resonant atoms,
/// the field mode, and the environment atoms.
struct TensorLayout {
  std::vector<int> factor_dims;

  int dim() const {
    int d = 1;
    for (int f : factor_dims) d *= f;
    return d;
  }
  int num_factors() const { return static_cast<int>(factor_dims.size()); }
};

/// Kronecker product, row-major index convention:
/// (i1*b.rows()+i2, j1*b.cols()+j2) = a(i1,j1)*b(i2,j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
struct EigenSystem {
  RealVector values;       // descending
  ComplexMatrix vectors;   // columns, same order as values
};

/// Throws NonHermitianInput when max|M - M^dag| > kHermTol; within tolerance
/// the input is symmetrized to (M + M^dag)/2 before decomposition.
EigenSystem eig_hermitian(const ComplexMatrix& m);

/// Cached propagator: one Hermitian eigendecomposition amortized over many
/// time points. unitary(t) = V diag(exp(-i*lambda*t)) V^dag.
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix& h) : es_(eig_hermitian(h)) {}

  StateVector evolve(const StateVector& psi0, double t) const;
  ComplexMatrix unitary(double t) const;
  const EigenSystem& eigensystem() const { return es_; }

 private:
  EigenSystem es_;
};

/// One-shot evolution exp(-i*h*t)|psi0>; use Propagator for repeated times.
StateVector evolve(const ComplexMatrix& h, const StateVector& psi0, double t);

/// Partial trace over the factors not listed in `keep`. The result's tensor
/// order follows the order of `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const TensorLayout& layout,
                            const std::vector<int>& keep);

/// Reduced density matrix of a pure state without forming the full projector:
/// rho_keep = M M^dag with M the keep-by-rest reshaping of psi.
ComplexMatrix reduced_density_from_state(const StateVector& psi,
                                         const TensorLayout& layout,
                                         const std::vector<int>& keep);

}  // namespace dickeenv
