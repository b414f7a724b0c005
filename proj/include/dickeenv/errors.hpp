#pragma once

#include <stdexcept>
#include <string>

namespace dickeenv {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// eig_hermitian received a matrix that is not Hermitian within tolerance.
struct NonHermitianInput : Error {
  using Error::Error;
};

/// Operand dimensions are incompatible (operator vs. state, layout vs. matrix).
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A tensor-factor index is out of range or repeated.
struct InvalidFactorIndex : Error {
  using Error::Error;
};

/// A state vector expected to be normalized is not.
struct UnnormalizedState : Error {
  using Error::Error;
};

/// The photon-number cutoff truncates states reachable from the initial condition.
struct CutoffTooSmall : Error {
  using Error::Error;
};

/// closed_form_u was asked for a sector other than the one-excitation one.
struct InvalidSector : Error {
  using Error::Error;
};

/// Detuning constraints (positivity, dispersive bound, pairwise gaps) cannot be met.
struct ConstraintUnsatisfiable : Error {
  using Error::Error;
};

/// Exhaustive configuration enumeration requested beyond the 2^A guard.
struct TooManyConfigurations : Error {
  using Error::Error;
};

/// A full-space evolution was requested beyond the dense-diagonalization guard.
struct DimensionGuardExceeded : Error {
  using Error::Error;
};

/// Statistics formulas evaluated outside their validity regime (mean < 5*std).
struct InvalidRegime : Error {
  using Error::Error;
};

/// An output file could not be written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace dickeenv
