#include "dickeenv/quantum.hpp"

#include <cmath>

namespace dickeenv {

ComplexMatrix qubit_sigma_plus() {
  // |1><0| with excited = index 0: row 0, column 1.
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

ComplexMatrix qubit_sigma_minus() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix qubit_sz() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.5;
  m(1, 1) = -0.5;
  return m;
}

namespace {

// Embeds a single-factor operator into the full space.
ComplexMatrix embed(const SystemLayout& layout, const ComplexMatrix& op, int factor) {
  const auto dims = layout.tensor().factor_dims;
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
    if (f == factor) {
      out = kron(out, op);
    } else {
      out = kron(out, ComplexMatrix::Identity(dims[f], dims[f]));
    }
  }
  return out;
}

ComplexMatrix ladder_down(int n_max) {
  ComplexMatrix a = ComplexMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

ComplexMatrix embed_blocks(const SystemLayout& layout,
                           const std::vector<std::pair<int, ComplexMatrix>>& blocks) {
  const auto dims = layout.tensor().factor_dims;
  const int num_factors = static_cast<int>(dims.size());
  std::vector<const ComplexMatrix*> slot(num_factors, nullptr);
  for (const auto& [factor, op] : blocks) {
    if (factor < 0 || factor >= num_factors) {
      throw InvalidFactorIndex("embed_blocks: factor " + std::to_string(factor) +
                               " out of range");
    }
    if (slot[factor] != nullptr) {
      throw InvalidFactorIndex("embed_blocks: factor " + std::to_string(factor) +
                               " listed twice");
    }
    if (op.rows() != dims[factor] || op.cols() != dims[factor]) {
      throw DimensionMismatch("embed_blocks: block does not match factor dimension");
    }
    slot[factor] = &op;
  }
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int f = 0; f < num_factors; ++f) {
    if (slot[f] != nullptr) {
      out = kron(out, *slot[f]);
    } else {
      out = kron(out, ComplexMatrix::Identity(dims[f], dims[f]));
    }
  }
  return out;
}

ComplexMatrix spin_operator(const SystemLayout& layout, SpinKind which, int site) {
  const int factor = layout.atom_factor(site);
  switch (which) {
    case SpinKind::plus:
      return embed(layout, qubit_sigma_plus(), factor);
    case SpinKind::minus:
      return embed(layout, qubit_sigma_minus(), factor);
    case SpinKind::z:
      return embed(layout, qubit_sz(), factor);
  }
  throw Error("spin_operator: unreachable");
}

ComplexMatrix field_operator(const SystemLayout& layout, FieldKind which) {
  const ComplexMatrix a = ladder_down(layout.n_max);
  switch (which) {
    case FieldKind::annihilate:
      return embed(layout, a, SystemLayout::kFieldFactor);
    case FieldKind::create:
      return embed(layout, a.adjoint(), SystemLayout::kFieldFactor);
    case FieldKind::number:
      return embed(layout, (a.adjoint() * a).eval(), SystemLayout::kFieldFactor);
  }
  throw Error("field_operator: unreachable");
}

ComplexMatrix excitation_number(const SystemLayout& layout) {
  ComplexMatrix n = field_operator(layout, FieldKind::number);
  for (int site = 0; site < 2 + layout.num_env; ++site) {
    n += spin_operator(layout, SpinKind::z, site);
  }
  return n;
}

void DensityMatrix::validate() const {
  if (rho.rows() != rho.cols()) {
    throw Error("DensityMatrix: not square");
  }
  const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    throw Error("DensityMatrix: not Hermitian, max|rho - rho^dag| = " + std::to_string(asym));
  }
  const double tr_err = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr_err > 1e-10) {
    throw Error("DensityMatrix: trace deviates from 1 by " + std::to_string(tr_err));
  }
  const EigenSystem es = eig_hermitian(rho);
  const double min_eig = es.values(es.values.size() - 1);
  if (min_eig < -1e-9) {
    throw Error("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix pure_density(const StateVector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    throw UnnormalizedState("pure_density: ||psi|| = " + std::to_string(norm));
  }
  return DensityMatrix{psi * psi.adjoint()};
}

StateVector basis_state(int dim, int idx) {
  if (idx < 0 || idx >= dim) {
    throw DimensionMismatch("basis_state: index out of range");
  }
  StateVector v = StateVector::Zero(dim);
  v(idx) = 1.0;
  return v;
}

}  // namespace dickeenv
