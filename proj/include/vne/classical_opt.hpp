#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "vne/complex_matrix.hpp"
#include "vne/entropy.hpp"

namespace vne {

/// Extremal trace distances reachable by unitary conjugation when two
/// spectra are fixed: the minimum is attained with both spectra sorted the
/// same way, the maximum with one of them reversed.  Inputs must be sorted
/// non-increasing (NotSorted otherwise).  Returns (t_min, t_max).
std::pair<double, double> permutation_extremes(const ProbVector& lam_rho,
                                               const ProbVector& lam_sigma);

/// True iff trace_distance(rho, sigma) lies within
/// [t_min - 1e-10, t_max + 1e-10] for the permutation extremes of the two
/// sorted spectra.
bool mirsky_bracket_check(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Inner objective of the staged minimization of the entropy difference at
/// fixed total-variation distance t.  After the difference q - p is reduced
/// to a single added coordinate of mass t and a removed part spread over the
/// remaining dim-2 coordinates, the free parameter is the fraction `split`
/// of the removed mass taken from the residual block:
///
///   H(1 - p_first - t) - H(1 - p_first - t*(1-split))
///     - t*(1-split)*log2(dim-2) - H(t*(1-split))
///
/// with H(x) = -x log2 x.  Requires dim >= 3, 0 <= split <= 1,
/// 0 <= p_first <= 1 - t (OutOfRange otherwise); dim == 3 uses
/// log2(dim-2) = 0 exactly.
double split_objective(int dim, double t, double p_first, double split);

struct SplitMinimum {
  double split;  ///< minimizing split fraction in [0,1]
  double value;  ///< objective value at the minimum (bits)
  bool pinned;   ///< true when the stationary point was infeasible and the
                 ///< minimum sits at split = 0
};

/// Exact minimizer of split_objective over split in [0,1] for t > 0.  The
/// objective is convex; its stationary point satisfies
/// t*(1-split) = (dim-2)(1-p_first)/(dim-1).  When t is below that
/// threshold the stationary point lies outside [0,1] and the minimum is
/// pinned at split = 0 with value -t*log2(dim-2) - H(t); otherwise the
/// stationary value is returned.
SplitMinimum minimize_split(int dim, double t, double p_first);

/// Result of the full staged minimization of H(q) - H(p) over all pairs at
/// total-variation distance t in dimension dim.
struct StagedMinimum {
  int dim;
  double t;
  /// Closed-form candidate from the branch whose inner split is pinned at
  /// zero; only defined for dim >= 3 and t <= (dim-2)/(dim-1).
  std::optional<double> pinned_value;
  /// Closed-form candidate from the branch with a stationary inner split;
  /// always defined, always the smaller of the two.
  double stationary_value;
  double minimum;
};

/// Evaluates both closed-form candidates and returns their minimum, which
/// always equals the stationary-branch value (and equals
/// -sharp_bound(dim, t)).  dim >= 2 required.
StagedMinimum staged_minimum(int dim, double t);

/// Independent brute-force result: maximal absolute entropy difference over
/// pairs of grid probability vectors whose total-variation distance lies
/// within half a grid step of t.
struct OracleResult {
  double max_diff;
  ProbVector argmax_p;
  ProbVector argmax_q;
  double grid_step;
};

/// Exhaustive search over the simplex grid with cells of size grid_step
/// (1/grid_step must be an integer).  Only dim 2 and 3 are supported; the
/// pair count grows as (1/grid_step)^(2(dim-1)) and GridTooFine is thrown
/// when it would exceed pair_budget.  Total-variation distances are
/// evaluated in integer grid units, so membership in the band
/// |tv - t| <= grid_step/2 is exact; reachable tv values are spaced
/// grid_step apart, so the band always holds the value nearest t.  Ties on
/// max_diff keep the lexicographically first (p, q) in grid order, making
/// the result deterministic.
OracleResult brute_force_max_diff(int dim, double t, double grid_step,
                                  std::int64_t pair_budget = 100'000'000);

/// Checks that concentrating the added mass on a single free coordinate
/// minimizes the entropy difference.  `delta_minus` is the mass removed
/// from each coordinate of p (elementwise <= p, and zero on at least one
/// coordinate — InfeasibleDeltaMinus otherwise); its total t is the mass to
/// be added back.  Returns true iff the best single-coordinate placement is
/// no worse (within 1e-10) than `trials` random interior placements drawn
/// Dirichlet-uniformly over the free coordinates.
bool rank1_delta_check(const ProbVector& p, std::span<const double> delta_minus,
                       int trials, std::uint64_t seed = 0x8BADF00D5EEDULL);

}  // namespace vne
