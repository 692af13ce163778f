#include "vne/classical_opt.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vne/bounds.hpp"
#include "vne/eig.hpp"
#include "vne/errors.hpp"
#include "vne/sampling.hpp"

namespace vne {

namespace {

ProbVector reversed(const ProbVector& p) {
  std::vector<double> r(p.raw().rbegin(), p.raw().rend());
  return ProbVector(std::move(r));
}

void check_sorted_non_increasing(const ProbVector& p, const char* which) {
  for (int i = 0; i + 1 < p.dim(); ++i) {
    if (p[i] < p[i + 1])
      throw NotSorted(std::string(which) +
                      " spectrum is not sorted non-increasing");
  }
}

}  // namespace

std::pair<double, double> permutation_extremes(const ProbVector& lam_rho,
                                               const ProbVector& lam_sigma) {
  if (lam_rho.dim() != lam_sigma.dim())
    throw DimensionMismatch("permutation_extremes: dimensions differ");
  check_sorted_non_increasing(lam_rho, "first");
  check_sorted_non_increasing(lam_sigma, "second");
  const double t_min = tv_distance(lam_rho, lam_sigma);
  const double t_max = tv_distance(lam_rho, reversed(lam_sigma));
  return {t_min, t_max};
}

bool mirsky_bracket_check(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw DimensionMismatch("mirsky_bracket_check: dimensions differ");
  const ProbVector lam_rho =
      ProbVector::from_spectrum(eig_hermitian(rho.mat()).values);
  const ProbVector lam_sigma =
      ProbVector::from_spectrum(eig_hermitian(sigma.mat()).values);
  const auto [t_min, t_max] = permutation_extremes(lam_rho, lam_sigma);
  const double t = trace_distance(rho, sigma);
  return t >= t_min - 1e-10 && t <= t_max + 1e-10;
}

double split_objective(int dim, double t, double p_first, double split) {
  if (dim < 3)
    throw OutOfRange("split_objective requires dim >= 3");
  if (!(t >= 0.0 && t <= 1.0))
    throw OutOfRange("split_objective requires t in [0, 1]");
  if (!(split >= 0.0 && split <= 1.0))
    throw OutOfRange("split fraction must lie in [0, 1]");
  if (!(p_first >= 0.0 && p_first <= 1.0 - t + 1e-12))
    throw OutOfRange("p_first must lie in [0, 1 - t]");
  const double w = t * (1.0 - split);
  return h_scalar(1.0 - p_first - t) - h_scalar(1.0 - p_first - w) -
         w * std::log2(static_cast<double>(dim - 2)) - h_scalar(w);
}

SplitMinimum minimize_split(int dim, double t, double p_first) {
  if (dim < 3)
    throw OutOfRange("minimize_split requires dim >= 3");
  if (!(t > 0.0 && t <= 1.0))
    throw OutOfRange("minimize_split requires t in (0, 1]");
  if (!(p_first >= 0.0 && p_first <= 1.0 - t + 1e-12))
    throw OutOfRange("p_first must lie in [0, 1 - t]");

  // Stationary point of the convex objective: t*(1-split) equal to
  // (dim-2)(1-p_first)/(dim-1).  Below that threshold the stationary split
  // would be negative, so the minimum is pinned at split = 0.
  const double w_star =
      (dim - 2) * (1.0 - p_first) / static_cast<double>(dim - 1);
  if (t < w_star) {
    return SplitMinimum{
        0.0,
        -t * std::log2(static_cast<double>(dim - 2)) - h_scalar(t),
        true};
  }
  double split = 1.0 - w_star / t;
  split = std::clamp(split, 0.0, 1.0);
  const double value = h_scalar(1.0 - p_first - t) -
                       h_scalar((1.0 - p_first) / (dim - 1)) -
                       w_star * std::log2(static_cast<double>(dim - 2)) -
                       h_scalar(w_star);
  return SplitMinimum{split, value, false};
}

StagedMinimum staged_minimum(int dim, double t) {
  if (dim < 2) throw InvalidDimension("staged_minimum requires dim >= 2");
  if (!(t >= 0.0 && t <= 1.0))
    throw OutOfRange("staged_minimum requires t in [0, 1]");

  StagedMinimum r;
  r.dim = dim;
  r.t = t;
  // Candidate from the branch with a stationary inner split, evaluated at
  // the boundary p_first = 1 - t; algebraically equal to -sharp_bound.
  r.stationary_value = -(t * std::log2(static_cast<double>(dim - 1)) +
                         h_scalar(t) + h_scalar(1.0 - t));
  // The pinned-split branch exists only while its feasible p_first interval
  // is non-empty, i.e. t <= (dim-2)/(dim-1); its minimum sits at
  // p_first = 1 - (dim-1) t/(dim-2).
  if (dim >= 3 && t <= static_cast<double>(dim - 2) / (dim - 1)) {
    const double dm2 = static_cast<double>(dim - 2);
    r.pinned_value = h_scalar(1.0 - t / dm2) -
                     h_scalar(1.0 - (dim - 1) * t / dm2) -
                     t * std::log2(dm2) - h_scalar(t);
  }
  r.minimum = r.pinned_value ? std::min(*r.pinned_value, r.stationary_value)
                             : r.stationary_value;
  return r;
}

namespace {

// All grid vectors with `dim` non-negative integer coordinates summing to n,
// in lexicographic order.
std::vector<std::vector<int>> grid_vectors(int dim, int n) {
  std::vector<std::vector<int>> out;
  if (dim == 2) {
    for (int a = 0; a <= n; ++a) out.push_back({a, n - a});
  } else {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n - a; ++b) out.push_back({a, b, n - a - b});
  }
  return out;
}

ProbVector to_prob(const std::vector<int>& v, int n) {
  std::vector<double> p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    p[i] = static_cast<double>(v[i]) / n;
  return ProbVector(std::move(p));
}

}  // namespace

OracleResult brute_force_max_diff(int dim, double t, double grid_step,
                                  std::int64_t pair_budget) {
  if (dim != 2 && dim != 3)
    throw InvalidDimension("brute_force_max_diff supports dim 2 and 3 only");
  if (!(t >= 0.0 && t <= 1.0))
    throw OutOfRange("brute_force_max_diff requires t in [0, 1]");
  if (!(grid_step > 0.0))
    throw OutOfRange("grid_step must be positive");
  const int n = static_cast<int>(std::llround(1.0 / grid_step));
  if (n < 1 || std::abs(n * grid_step - 1.0) > 1e-9)
    throw OutOfRange("grid_step must divide 1 into an integer number of cells");
  if (pair_budget < 1) throw OutOfRange("pair_budget must be positive");

  const std::int64_t count =
      dim == 2 ? static_cast<std::int64_t>(n) + 1
               : (static_cast<std::int64_t>(n) + 1) * (n + 2) / 2;
  if (count > pair_budget / count)
    throw GridTooFine("grid enumeration would need " + std::to_string(count) +
                      "^2 pairs, budget is " + std::to_string(pair_budget));

  const std::vector<std::vector<int>> vecs = grid_vectors(dim, n);
  std::vector<double> entropy(vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    entropy[i] = shannon_entropy(to_prob(vecs[i], n));

  // Total-variation distances in integer grid units: tv = l1/(2n) where l1
  // is even, so candidate tv values are spaced 1/n apart.  The matching
  // band is half a step on each side of t, which always contains the
  // nearest reachable tv.
  const double band = grid_step / 2.0 + 1e-12;
  const auto l1_lo = static_cast<std::int64_t>(std::ceil((t - band) * 2.0 * n));
  const auto l1_hi = static_cast<std::int64_t>(std::floor((t + band) * 2.0 * n));

  double best = -1.0;
  std::size_t best_i = 0, best_j = 0;
  bool found = false;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      int l1 = 0;
      for (int k = 0; k < dim; ++k)
        l1 += std::abs(vecs[i][static_cast<std::size_t>(k)] -
                       vecs[j][static_cast<std::size_t>(k)]);
      if (l1 < l1_lo || l1 > l1_hi) continue;
      const double diff = std::abs(entropy[i] - entropy[j]);
      if (diff > best) {
        best = diff;
        best_i = i;
        best_j = j;
        found = true;
      }
    }
  }
  if (!found)
    throw OutOfRange("no grid pair matches the requested t band");

  return OracleResult{best, to_prob(vecs[best_i], n), to_prob(vecs[best_j], n),
                      grid_step};
}

bool rank1_delta_check(const ProbVector& p, std::span<const double> delta_minus,
                       int trials, std::uint64_t seed) {
  const int d = p.dim();
  if (static_cast<int>(delta_minus.size()) != d)
    throw DimensionMismatch("rank1_delta_check: dimensions differ");
  if (trials < 0) throw OutOfRange("trials must be non-negative");

  double t = 0.0;
  std::vector<int> free_coords;
  for (int i = 0; i < d; ++i) {
    const double dm = delta_minus[static_cast<std::size_t>(i)];
    if (dm < 0.0 || dm > p[i] + 1e-12)
      throw OutOfRange("delta_minus must satisfy 0 <= delta_minus <= p");
    if (dm == 0.0) free_coords.push_back(i);
    t += dm;
  }
  if (free_coords.empty())
    throw InfeasibleDeltaMinus(
        "delta_minus must vanish on at least one coordinate");

  const double h_p = shannon_entropy(p);
  auto diff_at = [&](const std::vector<double>& delta_plus) {
    std::vector<double> q(p.raw().size());
    for (int i = 0; i < d; ++i)
      q[static_cast<std::size_t>(i)] = p[i] +
                                       delta_plus[static_cast<std::size_t>(i)] -
                                       delta_minus[static_cast<std::size_t>(i)];
    return shannon_entropy(ProbVector(std::move(q))) - h_p;
  };

  double extreme_min = 0.0;
  bool first = true;
  for (int k : free_coords) {
    std::vector<double> dp(static_cast<std::size_t>(d), 0.0);
    dp[static_cast<std::size_t>(k)] = t;
    const double v = diff_at(dp);
    if (first || v < extreme_min) extreme_min = v;
    first = false;
  }

  // Interior points: Dirichlet-uniform weights over the free coordinates
  // via normalized exponential draws.
  SplitMix64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> w(free_coords.size());
    double sum = 0.0;
    for (double& x : w) {
      x = -std::log(rng.next_unit_pos());
      sum += x;
    }
    std::vector<double> dp(static_cast<std::size_t>(d), 0.0);
    for (std::size_t k = 0; k < free_coords.size(); ++k)
      dp[static_cast<std::size_t>(free_coords[k])] =
          sum > 0.0 ? t * w[k] / sum : 0.0;
    if (extreme_min > diff_at(dp) + 1e-10) return false;
  }
  return true;
}

}  // namespace vne
