#pragma once

#include <optional>
#include <utility>

#include "vne/complex_matrix.hpp"

namespace vne {

/// Largest t for which fannes_bound applies: 1/(2e).
double fannes_validity_max();

/// 2t log2(dim) - 2t log2(2t) for t in (0, 1/(2e)], and 0 at t = 0.
/// Throws OutOfValidityRange for t above 1/(2e), InvalidDimension for
/// dim < 1.
double fannes_bound(int dim, double t);

/// 2t log2(dim) + 1/(e ln 2), valid for all t in [0,1].
double fannes_weak_bound(int dim, double t);

/// t log2(dim - 1) + h(t) + h(1 - t), the best possible bound on the entropy
/// difference at trace distance t.  The dim==2 case reduces to the binary
/// entropy of t.  Not monotone in t: it peaks at t = (dim-1)/dim with value
/// log2(dim) and decreases beyond the peak.  dim == 1 admits only t == 0
/// (returns 0); t > 0 there throws InvalidDimension.
double sharp_bound(int dim, double t);

/// Diagonal pair at trace distance exactly t whose entropy difference equals
/// sharp_bound(dim, t), for any t in [0,1]: first state
/// (1-t, t/(dim-1), ..., t/(dim-1)), second state (1, 0, ..., 0).
std::pair<DensityMatrix, DensityMatrix> extremal_pair(int dim, double t);

/// All three bounds at one (dim, t).  `fannes` is empty when t exceeds the
/// validity limit.
struct BoundReport {
  int dim;
  double t;
  std::optional<double> fannes;
  double fannes_weak;
  double sharp;
};

BoundReport make_bound_report(int dim, double t);

}  // namespace vne
