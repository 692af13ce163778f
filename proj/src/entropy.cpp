#include "vne/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vne/eig.hpp"
#include "vne/errors.hpp"

namespace vne {

ProbVector::ProbVector(std::vector<double> entries) : p_(std::move(entries)) {
  if (p_.empty()) throw InvalidDimension("probability vector must be non-empty");
  double sum = 0.0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-12)
      throw InvalidProbability("probability entry " + std::to_string(v) +
                               " outside [-1e-12, 1 + 1e-12]");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw InvalidProbability("probabilities sum to " + std::to_string(sum) +
                             ", not 1 within 1e-10");
}

ProbVector ProbVector::uniform(int dim) {
  if (dim < 1) throw InvalidDimension("dimension must be positive");
  return ProbVector(Raw{}, std::vector<double>(static_cast<std::size_t>(dim),
                                               1.0 / dim));
}

ProbVector ProbVector::point_mass(int dim, int k) {
  if (dim < 1) throw InvalidDimension("dimension must be positive");
  if (k < 0 || k >= dim)
    throw OutOfRange("point mass coordinate out of range");
  std::vector<double> p(static_cast<std::size_t>(dim), 0.0);
  p[static_cast<std::size_t>(k)] = 1.0;
  return ProbVector(Raw{}, std::move(p));
}

ProbVector ProbVector::from_spectrum(std::span<const double> values) {
  std::vector<double> p(values.begin(), values.end());
  for (double& v : p) {
    if (v < -1e-10)
      throw NegativeEigenvalue("spectrum entry " + std::to_string(v) +
                               " below -1e-10");
    if (v < 0.0) v = 0.0;
  }
  return ProbVector(std::move(p));
}

double SignedDecomposition::plus_total() const {
  double s = 0.0;
  for (double v : plus) s += v;
  return s;
}

double SignedDecomposition::minus_total() const {
  double s = 0.0;
  for (double v : minus) s += v;
  return s;
}

double h_scalar(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12))
    throw OutOfRange("h_scalar argument " + std::to_string(x) +
                     " outside [0,1] tolerance band");
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x);
}

double shannon_entropy(const ProbVector& p) {
  // Summing over sorted entries makes the result exactly invariant under
  // permutations of p.
  std::vector<double> v(static_cast<std::size_t>(p.dim()));
  for (int i = 0; i < p.dim(); ++i) v[static_cast<std::size_t>(i)] = p[i];
  std::sort(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += h_scalar(x);
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const EigenResult e = eig_hermitian(rho.mat());
  return shannon_entropy(ProbVector::from_spectrum(e.values));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw DimensionMismatch("trace_distance: dimensions differ");
  const EigenResult e = eig_hermitian(rho.mat() - sigma.mat());
  double s = 0.0;
  for (double v : e.values) s += std::abs(v);
  return 0.5 * s;
}

double tv_distance(const ProbVector& p, const ProbVector& q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("tv_distance: dimensions differ");
  double s = 0.0;
  for (int i = 0; i < p.dim(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

SignedDecomposition signed_decompose(const ProbVector& p, const ProbVector& q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("signed_decompose: dimensions differ");
  SignedDecomposition d;
  d.plus.resize(static_cast<std::size_t>(p.dim()));
  d.minus.resize(static_cast<std::size_t>(p.dim()));
  for (int i = 0; i < p.dim(); ++i) {
    const double diff = p[i] - q[i];
    d.plus[static_cast<std::size_t>(i)] = diff > 0.0 ? diff : 0.0;
    d.minus[static_cast<std::size_t>(i)] = diff < 0.0 ? -diff : 0.0;
  }
  return d;
}

}  // namespace vne
