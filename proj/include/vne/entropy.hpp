#pragma once

#include <span>
#include <vector>

#include "vne/complex_matrix.hpp"

namespace vne {

/// Probability vector: finite entries in [-1e-12, 1] summing to 1 within
/// 1e-10.  Entries are stored as given; tiny negatives are clamped to zero
/// on read.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> entries);

  static ProbVector uniform(int dim);

  /// Point mass at coordinate k.
  static ProbVector point_mass(int dim, int k);

  /// From an eigenvalue vector: values in [-1e-10, 0) are clamped to zero,
  /// anything more negative throws NegativeEigenvalue.
  static ProbVector from_spectrum(std::span<const double> values);

  int dim() const { return static_cast<int>(p_.size()); }

  /// Entry clamped into [0,1].
  double operator[](int i) const {
    double v = p_[static_cast<std::size_t>(i)];
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  }

  /// Entries exactly as stored (possibly with tiny negatives).
  const std::vector<double>& raw() const { return p_; }

 private:
  struct Raw {};
  ProbVector(Raw, std::vector<double> p) : p_(std::move(p)) {}

  std::vector<double> p_;
};

/// Coordinatewise positive/negative parts of p - q.
struct SignedDecomposition {
  std::vector<double> plus;   // max(p_i - q_i, 0)
  std::vector<double> minus;  // max(q_i - p_i, 0)

  double plus_total() const;
  double minus_total() const;
};

/// -x log2 x, with h(0) = 0 by continuity.  Accepts x in
/// [-1e-12, 1 + 1e-12] (clamped into [0,1]); throws OutOfRange beyond that.
double h_scalar(double x);

/// Shannon entropy in bits.  Terms are accumulated over a sorted copy of the
/// entries, so permutations of the same multiset give bit-identical results.
double shannon_entropy(const ProbVector& p);

/// Entropy of the spectrum, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// (1/2) * sum of |eigenvalues of rho - sigma|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Total variation distance (1/2) * sum |p_i - q_i|.
double tv_distance(const ProbVector& p, const ProbVector& q);

/// Split p - q into its positive and negative parts.
SignedDecomposition signed_decompose(const ProbVector& p, const ProbVector& q);

}  // namespace vne
