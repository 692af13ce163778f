#pragma once

#include <vector>

#include "vne/complex_matrix.hpp"

namespace vne {

/// Spectral decomposition A = V diag(values) V^*.
struct EigenResult {
  /// Eigenvalues sorted in non-increasing order.
  std::vector<double> values;
  /// Columns are the corresponding eigenvectors.
  UnitaryMatrix vectors;
};

/// Full spectral decomposition of a Hermitian matrix by cyclic Jacobi
/// rotations with complex (phased) Givens transformations.
///
/// Input must be Hermitian to within max|a_ij - conj(a_ji)| <= 1e-12; the
/// matrix is symmetrized (a <- (a + a^*)/2) before iterating so the
/// remaining asymmetry never leaks into the result.  Sweeps run until the
/// off-diagonal Frobenius norm drops below 1e-13 times the Frobenius norm of
/// the input (NoConvergence after 100 sweeps, which in practice is never
/// reached for dim <= 64).  Eigenvalues are stable-sorted non-increasing, so
/// equal eigenvalues keep the internal ordering the rotations produced and
/// repeated calls on the same input give bit-identical output.
EigenResult eig_hermitian(const ComplexMatrix& a);

/// U A U^*.
ComplexMatrix conjugate_by_unitary(const ComplexMatrix& a,
                                   const UnitaryMatrix& u);

}  // namespace vne
