#include "vne/complex_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "vne/eig.hpp"
#include "vne/entropy.hpp"
#include "vne/errors.hpp"

namespace vne {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > ComplexMatrix::kMaxDim) {
    throw InvalidDimension("matrix dimension must be in [1, " +
                           std::to_string(ComplexMatrix::kMaxDim) + "], got " +
                           std::to_string(dim));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  check_dim(dim);
  a_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
  check_dim(dim);
  if (a_.size() != static_cast<std::size_t>(dim) * dim) {
    throw DimensionMismatch("expected " + std::to_string(dim * dim) +
                            " entries for a " + std::to_string(dim) + "x" +
                            std::to_string(dim) + " matrix, got " +
                            std::to_string(a_.size()));
  }
  if (!all_finite()) throw OutOfRange("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = diag[static_cast<std::size_t>(i)];
  if (!m.all_finite()) throw OutOfRange("matrix entries must be finite");
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_error() const {
  double e = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      e = std::max(e, std::abs(at(i, j) - std::conj(at(j, i))));
  return e;
}

double ComplexMatrix::unitarity_error() const {
  double e = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < dim_; ++k) s += std::conj(at(k, i)) * at(k, j);
      if (i == j) s -= 1.0;
      e = std::max(e, std::abs(s));
    }
  }
  return e;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix dimensions differ");
  ComplexMatrix r(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + rhs.a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix dimensions differ");
  ComplexMatrix r(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - rhs.a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix dimensions differ");
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const Complex aik = at(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < dim_; ++j) r.at(i, j) += aik * rhs.at(k, j);
    }
  }
  return r;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix r(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * scalar;
  return r;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.hermiticity_error() > 1e-12)
    throw NotHermitian("density matrix is not Hermitian within 1e-12");
  const Complex tr = m_.trace();
  if (std::abs(tr.real() - 1.0) > 1e-12 || std::abs(tr.imag()) > 1e-12)
    throw OutOfRange("density matrix trace must equal 1 within 1e-12");
  const EigenResult e = eig_hermitian(m_);
  for (double v : e.values) {
    if (v < -1e-10)
      throw NegativeEigenvalue("density matrix has eigenvalue " +
                               std::to_string(v) + " below -1e-10");
  }
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
  return DensityMatrix(Unchecked{}, std::move(m));
}

DensityMatrix DensityMatrix::from_probabilities(std::span<const double> probs) {
  ProbVector p(std::vector<double>(probs.begin(), probs.end()));
  ComplexMatrix m(p.dim());
  for (int i = 0; i < p.dim(); ++i) m.at(i, i) = p[i];
  return DensityMatrix(Unchecked{}, std::move(m));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.unitarity_error() > 1e-10)
    throw NotUnitary("matrix is not unitary within 1e-10");
}

UnitaryMatrix UnitaryMatrix::unchecked(ComplexMatrix m) {
  return UnitaryMatrix(Unchecked{}, std::move(m));
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(Unchecked{}, ComplexMatrix::identity(dim));
}

}  // namespace vne
