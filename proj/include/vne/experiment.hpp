#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vne/bounds.hpp"
#include "vne/sampling.hpp"

namespace vne {

/// One sampled pair: trace distance and absolute entropy difference.
struct ScatterRecord {
  double t;
  double delta;
};

struct ScatterParams {
  int dim = 2;
  std::int64_t samples = 20000;
  std::uint64_t seed = 0;
  Measure measure = Measure::rank_mixture;
  /// Fault injection for testing the abort path: when >= 0, the record at
  /// this index gets a delta pushed above the bound.  -1 disables.
  std::int64_t inject_violation_at = -1;
};

/// Generates `samples` pairs (indices 2k, 2k+1 of the seeded stream),
/// records (trace_distance, |S difference|) in index order, and throws
/// BoundViolation — carrying seed and index for reproduction — if any
/// record exceeds sharp_bound(dim, t) + 1e-9.
std::vector<ScatterRecord> run_scatter(const ScatterParams& params);

/// One bound-table row per t value.
std::vector<BoundReport> emit_bound_table(int dim,
                                          std::span<const double> t_values);

/// CSV with header "t,delta", 12 significant digits, one row per record.
void write_scatter_csv(std::ostream& out, std::span<const ScatterRecord> records);

/// CSV with header "t,fannes,fannes_weak,sharp"; the fannes cell is empty
/// where the bound does not apply.
void write_bound_table_csv(std::ostream& out, std::span<const BoundReport> rows);

/// Fixed 800x600 scatter plot: one <circle> per record, one <path> for the
/// sharp bound over [0,1] and one for the Fannes bound over its validity
/// range; axes [0,1] x [0, log2(dim)].
void write_scatter_svg(std::ostream& out, int dim,
                       std::span<const ScatterRecord> records);

enum class VerifySuite { saturation, staged, oracle, mirsky, all };

/// Parses a suite name; throws OutOfRange on anything else.
VerifySuite parse_suite(const std::string& name);

struct VerifyParams {
  /// Dimensions to sweep; empty selects each check's default range.
  std::vector<int> dims;
  /// Sampled pairs per dimension for the mirsky suite.
  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  /// Grid resolution for the t sweeps (points on [0,1]).
  int grid_points = 101;
};

struct CheckResult {
  std::string name;
  bool pass;
  double residual;   ///< measured worst deviation
  double tolerance;  ///< allowed deviation
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Runs the selected verification suite; every check appears in the report
/// with its measured residual.
VerifyReport run_verify(VerifySuite suite, const VerifyParams& params);

/// One line per check: PASS/FAIL, name, residual, tolerance, detail.
void print_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace vne
