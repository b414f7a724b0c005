#include "dickeenv/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace dickeenv {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

EigenSystem eig_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NonHermitianInput("eig_hermitian: matrix is not square");
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermTol) {
    throw NonHermitianInput("eig_hermitian: max|M - M^dag| = " +
                            std::to_string(asym) + " exceeds tolerance");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("eig_hermitian: eigensolver failed to converge");
  }
  // SelfAdjointEigenSolver sorts ascending; flip to descending.
  const int n = static_cast<int>(m.rows());
  EigenSystem es;
  es.values = solver.eigenvalues().reverse();
  es.vectors.resize(n, n);
  for (int c = 0; c < n; ++c) es.vectors.col(c) = solver.eigenvectors().col(n - 1 - c);
  return es;
}

StateVector Propagator::evolve(const StateVector& psi0, double t) const {
  if (psi0.size() != es_.vectors.rows()) {
    throw DimensionMismatch("evolve: state dimension does not match Hamiltonian");
  }
  const StateVector coeffs = es_.vectors.adjoint() * psi0;
  StateVector rotated(coeffs.size());
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    rotated(k) = std::exp(Complex(0.0, -es_.values(k) * t)) * coeffs(k);
  }
  return es_.vectors * rotated;
}

ComplexMatrix Propagator::unitary(double t) const {
  const Eigen::Index n = es_.vectors.rows();
  StateVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::exp(Complex(0.0, -es_.values(k) * t));
  }
  return es_.vectors * phases.asDiagonal() * es_.vectors.adjoint();
}

StateVector evolve(const ComplexMatrix& h, const StateVector& psi0, double t) {
  if (h.rows() != psi0.size()) {
    throw DimensionMismatch("evolve: state dimension does not match Hamiltonian");
  }
  return Propagator(h).evolve(psi0, t);
}

namespace {

// Row-major strides for a factor list.
std::vector<int> strides_of(const TensorLayout& layout) {
  const int n = layout.num_factors();
  std::vector<int> strides(n, 1);
  for (int f = n - 2; f >= 0; --f) {
    strides[f] = strides[f + 1] * layout.factor_dims[f + 1];
  }
  return strides;
}

void check_keep(const TensorLayout& layout, const std::vector<int>& keep) {
  const int n = layout.num_factors();
  std::vector<bool> seen(n, false);
  for (int f : keep) {
    if (f < 0 || f >= n) {
      throw InvalidFactorIndex("factor index " + std::to_string(f) +
                               " out of range for " + std::to_string(n) + " factors");
    }
    if (seen[f]) {
      throw InvalidFactorIndex("factor index " + std::to_string(f) + " repeated");
    }
    seen[f] = true;
  }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const TensorLayout& layout,
                            const std::vector<int>& keep) {
  if (rho.rows() != rho.cols() || rho.rows() != layout.dim()) {
    throw DimensionMismatch("partial_trace: density matrix does not match layout");
  }
  check_keep(layout, keep);
  const auto full = strides_of(layout);
  const int n = layout.num_factors();
  std::vector<bool> kept(n, false);
  for (int f : keep) kept[f] = true;
  std::vector<int> traced;
  for (int f = 0; f < n; ++f) {
    if (!kept[f]) traced.push_back(f);
  }

  int keep_dim = 1;
  for (int f : keep) keep_dim *= layout.factor_dims[f];
  int trace_dim = 1;
  for (int f : traced) trace_dim *= layout.factor_dims[f];

  // Expand an output/trace compound index into a full-space offset.
  auto offset = [&](const std::vector<int>& factors, int compound) {
    int off = 0;
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      const int d = layout.factor_dims[factors[i]];
      off += (compound % d) * full[factors[i]];
      compound /= d;
    }
    return off;
  };

  ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
  std::vector<int> trace_offsets(trace_dim);
  for (int t = 0; t < trace_dim; ++t) trace_offsets[t] = offset(traced, t);
  std::vector<int> keep_offsets(keep_dim);
  for (int k = 0; k < keep_dim; ++k) keep_offsets[k] = offset(keep, k);

  for (int r = 0; r < keep_dim; ++r) {
    for (int c = 0; c < keep_dim; ++c) {
      Complex acc = 0.0;
      for (int t = 0; t < trace_dim; ++t) {
        acc += rho(keep_offsets[r] + trace_offsets[t], keep_offsets[c] + trace_offsets[t]);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix reduced_density_from_state(const StateVector& psi,
                                         const TensorLayout& layout,
                                         const std::vector<int>& keep) {
  if (psi.size() != layout.dim()) {
    throw DimensionMismatch("reduced_density_from_state: state does not match layout");
  }
  check_keep(layout, keep);
  const auto full = strides_of(layout);
  const int n = layout.num_factors();
  std::vector<bool> kept(n, false);
  for (int f : keep) kept[f] = true;
  std::vector<int> traced;
  for (int f = 0; f < n; ++f) {
    if (!kept[f]) traced.push_back(f);
  }
  int keep_dim = 1;
  for (int f : keep) keep_dim *= layout.factor_dims[f];
  int trace_dim = 1;
  for (int f : traced) trace_dim *= layout.factor_dims[f];

  auto offset = [&](const std::vector<int>& factors, int compound) {
    int off = 0;
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      const int d = layout.factor_dims[factors[i]];
      off += (compound % d) * full[factors[i]];
      compound /= d;
    }
    return off;
  };

  ComplexMatrix m(keep_dim, trace_dim);
  for (int k = 0; k < keep_dim; ++k) {
    const int ko = offset(keep, k);
    for (int t = 0; t < trace_dim; ++t) {
      m(k, t) = psi(ko + offset(traced, t));
    }
  }
  return m * m.adjoint();
}

}  // namespace dickeenv
