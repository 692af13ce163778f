#include "vne/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "vne/errors.hpp"

namespace vne {

namespace {

// Sum of squared moduli of the strict upper triangle (== half the
// off-diagonal Frobenius norm squared, since the iterate stays Hermitian).
double offdiag_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) s += std::norm(a.at(i, j));
  return s;
}

}  // namespace

EigenResult eig_hermitian(const ComplexMatrix& input) {
  const int d = input.dim();
  if (d > ComplexMatrix::kMaxDim)
    throw InvalidDimension("eigensolver supports dimensions up to 64");
  if (input.hermiticity_error() > 1e-12)
    throw NotHermitian("eig_hermitian requires a Hermitian matrix (1e-12)");

  // Symmetrize so sub-tolerance asymmetry cannot leak into the iteration.
  ComplexMatrix a(d);
  for (int i = 0; i < d; ++i) {
    a.at(i, i) = Complex{input.at(i, i).real(), 0.0};
    for (int j = i + 1; j < d; ++j) {
      const Complex v = 0.5 * (input.at(i, j) + std::conj(input.at(j, i)));
      a.at(i, j) = v;
      a.at(j, i) = std::conj(v);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(d);
  const double scale = input.frobenius_norm();
  // Convergence target on the full off-diagonal Frobenius norm; the factor
  // 2 converts the upper-triangle sum used below.
  const double target_sq = 1e-13 * scale * 1e-13 * scale / 2.0;

  constexpr int kMaxSweeps = 100;
  bool converged = offdiag_sq(a) <= target_sq;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const double m = std::abs(a.at(p, q));
        if (m == 0.0) continue;
        const Complex ph = a.at(p, q) / m;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * m);
        // Smaller root of t^2 - 2*tau*t - 1 = 0, for stability.
        const double sgn = tau >= 0.0 ? 1.0 : -1.0;
        const double t = -sgn / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Rotation J: J_pp = c*ph, J_pq = -s*ph, J_qp = s, J_qq = c,
        // identity elsewhere; update A <- J* A J, V <- V J.
        a.at(p, p) = app + t * m;
        a.at(q, q) = aqq - t * m;
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        for (int k = 0; k < d; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a.at(k, p);
          const Complex akq = a.at(k, q);
          a.at(k, p) = akp * (c * ph) + akq * s;
          a.at(k, q) = akp * (-s * ph) + akq * c;
          a.at(p, k) = std::conj(a.at(k, p));
          a.at(q, k) = std::conj(a.at(k, q));
        }
        for (int k = 0; k < d; ++k) {
          const Complex vkp = v.at(k, p);
          const Complex vkq = v.at(k, q);
          v.at(k, p) = vkp * (c * ph) + vkq * s;
          v.at(k, q) = vkp * (-s * ph) + vkq * c;
        }
      }
    }
    converged = offdiag_sq(a) <= target_sq;
  }
  if (!converged)
    throw NoConvergence("Jacobi iteration did not converge in 100 sweeps");

  // Stable sort non-increasing: equal eigenvalues keep the order the
  // rotations produced, so repeated runs are bit-identical.
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](int i, int j) {
    return a.at(i, i).real() > a.at(j, j).real();
  });

  std::vector<double> values(static_cast<std::size_t>(d));
  ComplexMatrix vec(d);
  for (int j = 0; j < d; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    values[static_cast<std::size_t>(j)] = a.at(src, src).real();
    for (int i = 0; i < d; ++i) vec.at(i, j) = v.at(i, src);
  }
  return EigenResult{std::move(values), UnitaryMatrix::unchecked(std::move(vec))};
}

ComplexMatrix conjugate_by_unitary(const ComplexMatrix& a,
                                   const UnitaryMatrix& u) {
  if (a.dim() != u.dim())
    throw DimensionMismatch("conjugate_by_unitary: dimensions differ");
  return u.mat() * a * u.mat().adjoint();
}

}  // namespace vne
