#pragma once

#include <complex>
#include <span>
#include <vector>

namespace vne {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
///
/// Dimensions are limited to 1..64: everything in this library operates on
/// small density matrices, and the limit keeps accidental quadratic blowups
/// from a bad CLI argument at bay.
class ComplexMatrix {
 public:
  static constexpr int kMaxDim = 64;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(int dim);

  /// From row-major entries; `entries.size()` must equal `dim*dim` and all
  /// entries must be finite.
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix identity(int dim);

  /// Diagonal matrix with the given real diagonal.
  static ComplexMatrix diagonal(std::span<const double> diag);

  int dim() const { return dim_; }

  Complex& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;

  Complex trace() const;

  /// max_{ij} |a_ij|
  double max_abs() const;

  /// sqrt(sum |a_ij|^2)
  double frobenius_norm() const;

  /// max_{ij} |a_ij - conj(a_ji)|; zero iff exactly Hermitian.
  double hermiticity_error() const;

  /// max_{ij} |(U^* U - I)_ij|
  double unitarity_error() const;

  bool all_finite() const;

  const std::vector<Complex>& entries() const { return a_; }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(Complex scalar) const;

 private:
  int dim_;
  std::vector<Complex> a_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.  The checked
/// constructor enforces all three (hermiticity error <= 1e-12, |tr - 1| <=
/// 1e-12, eigenvalues >= -1e-10); `unchecked` skips validation for callers
/// that construct states from data that is correct by construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix unchecked(ComplexMatrix m);

  /// Diagonal state from a probability vector (validated).
  static DensityMatrix from_probabilities(std::span<const double> probs);

  const ComplexMatrix& mat() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Matrix validated (or trusted) to satisfy U^* U = I within 1e-10.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix m);

  static UnitaryMatrix unchecked(ComplexMatrix m);

  static UnitaryMatrix identity(int dim);

  const ComplexMatrix& mat() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  struct Unchecked {};
  UnitaryMatrix(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

}  // namespace vne
