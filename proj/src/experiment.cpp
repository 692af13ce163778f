#include "vne/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "vne/classical_opt.hpp"
#include "vne/eig.hpp"
#include "vne/entropy.hpp"
#include "vne/errors.hpp"

namespace vne {

namespace {

constexpr double kViolationTol = 1e-9;

// 12 significant digits; fixed formatting keeps output byte-deterministic.
std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::vector<ScatterRecord> run_scatter(const ScatterParams& params) {
  if (params.dim < 2)
    throw InvalidDimension("run_scatter requires dim >= 2");
  if (params.samples < 1) throw OutOfRange("run_scatter requires samples >= 1");

  const SamplerConfig cfg{params.seed, params.dim, params.measure};
  std::vector<ScatterRecord> records;
  records.reserve(static_cast<std::size_t>(params.samples));
  for (std::int64_t i = 0; i < params.samples; ++i) {
    const DensityMatrix rho =
        sample_density(cfg, static_cast<std::uint64_t>(2 * i));
    const DensityMatrix sigma =
        sample_density(cfg, static_cast<std::uint64_t>(2 * i + 1));
    const double t = trace_distance(rho, sigma);
    double delta =
        std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma));
    const double bound = sharp_bound(params.dim, t);
    if (i == params.inject_violation_at) delta = bound + 1.0;
    if (delta > bound + kViolationTol) {
      throw BoundViolation(
          "entropy difference " + fmt12(delta) + " exceeds bound " +
              fmt12(bound) + " at t=" + fmt12(t) + " (seed=" +
              std::to_string(params.seed) + ", index=" + std::to_string(i) +
              ")",
          params.seed, i, t, delta, bound);
    }
    records.push_back(ScatterRecord{t, delta});
  }
  return records;
}

std::vector<BoundReport> emit_bound_table(int dim,
                                          std::span<const double> t_values) {
  if (dim < 2) throw InvalidDimension("emit_bound_table requires dim >= 2");
  std::vector<BoundReport> rows;
  rows.reserve(t_values.size());
  for (double t : t_values) rows.push_back(make_bound_report(dim, t));
  return rows;
}

void write_scatter_csv(std::ostream& out,
                       std::span<const ScatterRecord> records) {
  out << "t,delta\n";
  for (const ScatterRecord& r : records)
    out << fmt12(r.t) << ',' << fmt12(r.delta) << '\n';
}

void write_bound_table_csv(std::ostream& out,
                           std::span<const BoundReport> rows) {
  out << "t,fannes,fannes_weak,sharp\n";
  for (const BoundReport& r : rows) {
    out << fmt12(r.t) << ',';
    if (r.fannes) out << fmt12(*r.fannes);
    out << ',' << fmt12(r.fannes_weak) << ',' << fmt12(r.sharp) << '\n';
  }
}

void write_scatter_svg(std::ostream& out, int dim,
                       std::span<const ScatterRecord> records) {
  if (dim < 2) throw InvalidDimension("write_scatter_svg requires dim >= 2");
  constexpr double kWidth = 800.0, kHeight = 600.0;
  constexpr double kLeft = 60.0, kRight = 20.0, kTop = 20.0, kBottom = 45.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double y_max = std::log2(static_cast<double>(dim));
  auto px = [&](double t) { return kLeft + t * plot_w; };
  auto py = [&](double delta) {
    return kTop + (1.0 - std::clamp(delta / y_max, 0.0, 1.0)) * plot_h;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n";
  // Axes.
  out << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop + plot_h)
      << "\" x2=\"" << fmt2(kLeft + plot_w) << "\" y2=\""
      << fmt2(kTop + plot_h) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop) << "\" x2=\""
      << fmt2(kLeft) << "\" y2=\"" << fmt2(kTop + plot_h)
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << fmt2(kLeft + plot_w / 2.0) << "\" y=\""
      << fmt2(kHeight - 10.0)
      << "\" text-anchor=\"middle\" font-size=\"14\">trace distance</text>\n";
  out << "<text x=\"15\" y=\"" << fmt2(kTop + plot_h / 2.0)
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 15 "
      << fmt2(kTop + plot_h / 2.0)
      << ")\">entropy difference (bits)</text>\n";

  // One point per record.
  for (const ScatterRecord& r : records) {
    out << "<circle cx=\"" << fmt2(px(r.t)) << "\" cy=\"" << fmt2(py(r.delta))
        << "\" r=\"1.5\" fill=\"#1f6fb4\" fill-opacity=\"0.4\"/>\n";
  }

  // Bound curves: the attainable bound over all of [0,1], the weaker
  // log-based bound only on its validity range.
  out << "<path d=\"";
  constexpr int kCurvePoints = 200;
  for (int k = 0; k <= kCurvePoints; ++k) {
    const double t = static_cast<double>(k) / kCurvePoints;
    out << (k == 0 ? "M" : " L") << fmt2(px(t)) << ' '
        << fmt2(py(sharp_bound(dim, t)));
  }
  out << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  out << "<path d=\"";
  const double t_lim = fannes_validity_max();
  for (int k = 0; k <= kCurvePoints; ++k) {
    const double t = t_lim * k / kCurvePoints;
    const double b = std::min(fannes_bound(dim, t), y_max);
    out << (k == 0 ? "M" : " L") << fmt2(px(t)) << ' ' << fmt2(py(b));
  }
  out << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
  out << "</svg>\n";
}

VerifySuite parse_suite(const std::string& name) {
  if (name == "saturation") return VerifySuite::saturation;
  if (name == "staged") return VerifySuite::staged;
  if (name == "oracle") return VerifySuite::oracle;
  if (name == "mirsky") return VerifySuite::mirsky;
  if (name == "all") return VerifySuite::all;
  throw OutOfRange("unknown verify suite '" + name +
                   "' (expected saturation, staged, oracle, mirsky, or all)");
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

std::vector<int> dims_or_default(const VerifyParams& params,
                                 std::vector<int> fallback) {
  return params.dims.empty() ? std::move(fallback) : params.dims;
}

void run_saturation(const VerifyParams& params, VerifyReport& report) {
  for (int dim : dims_or_default(params, {2, 3, 4, 5, 6, 7, 8})) {
    double worst_gap = 0.0, worst_dist = 0.0;
    for (int k = 0; k < params.grid_points; ++k) {
      const double t = static_cast<double>(k) / (params.grid_points - 1);
      const auto [rho, sigma] = extremal_pair(dim, t);
      const double delta =
          std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma));
      worst_gap = std::max(worst_gap, std::abs(delta - sharp_bound(dim, t)));
      worst_dist =
          std::max(worst_dist, std::abs(trace_distance(rho, sigma) - t));
    }
    const double residual = std::max(worst_gap, worst_dist);
    report.checks.push_back(
        {"saturation d=" + std::to_string(dim), residual <= 1e-12, residual,
         1e-12,
         "entropy gap " + fmt12(worst_gap) + ", distance gap " +
             fmt12(worst_dist)});
  }
}

void run_staged(const VerifyParams& params, VerifyReport& report) {
  for (int dim : dims_or_default(params, {2, 3, 4, 5, 6, 7, 8})) {
    double worst_identity = 0.0, worst_order = 0.0;
    for (int k = 0; k < params.grid_points; ++k) {
      const double t = static_cast<double>(k) / (params.grid_points - 1);
      const StagedMinimum sm = staged_minimum(dim, t);
      worst_identity =
          std::max(worst_identity, std::abs(sm.minimum + sharp_bound(dim, t)));
      if (sm.pinned_value) {
        worst_order = std::max(
            worst_order, std::max(0.0, sm.stationary_value - *sm.pinned_value));
      }
    }
    const double residual = std::max(worst_identity, worst_order);
    report.checks.push_back(
        {"staged d=" + std::to_string(dim), residual <= 1e-12, residual, 1e-12,
         "identity gap " + fmt12(worst_identity) + ", ordering slack " +
             fmt12(worst_order)});
  }
}

// Largest value of the attainable bound over [lo, hi]; the bound peaks at
// t = (dim-1)/dim, so the interval maximum is at the peak if it is inside,
// otherwise at an endpoint.
double bound_band_max(int dim, double lo, double hi) {
  lo = std::clamp(lo, 0.0, 1.0);
  hi = std::clamp(hi, 0.0, 1.0);
  const double peak = static_cast<double>(dim - 1) / dim;
  if (lo <= peak && peak <= hi) return std::log2(static_cast<double>(dim));
  return std::max(sharp_bound(dim, lo), sharp_bound(dim, hi));
}

void run_oracle(const VerifyParams& params, VerifyReport& report) {
  struct Case {
    int dim;
    double step;
  };
  const Case cases[] = {{2, 0.0025}, {3, 0.01}};
  const double t_values[] = {0.1, 0.25, 0.5, 0.75};
  for (const Case& c : cases) {
    if (!params.dims.empty() &&
        std::find(params.dims.begin(), params.dims.end(), c.dim) ==
            params.dims.end())
      continue;
    for (double t : t_values) {
      const OracleResult r = brute_force_max_diff(c.dim, t, c.step);
      const double sharp = sharp_bound(c.dim, t);
      // The search band reaches half a step either side of t, and the bound
      // is not monotone, so the cap is its maximum over the band.
      const double cap = bound_band_max(c.dim, t - c.step, t + c.step);
      const double under = std::max(0.0, (sharp - 0.03) - r.max_diff);
      const double over = std::max(0.0, r.max_diff - (cap + 1e-9));
      const double residual = std::max(under, over);
      report.checks.push_back(
          {"oracle d=" + std::to_string(c.dim) + " t=" + fmt12(t),
           residual == 0.0, residual, 0.0,
           "max_diff " + fmt12(r.max_diff) + ", bound " + fmt12(sharp) +
               ", band cap " + fmt12(cap)});
    }
  }
}

void run_mirsky(const VerifyParams& params, VerifyReport& report) {
  for (int dim : dims_or_default(params, {2, 3, 4})) {
    double worst = 0.0;
    std::int64_t failures = 0;
    const SamplerConfig cfg{params.seed, dim, Measure::hilbert_schmidt};
    for (std::int64_t i = 0; i < params.samples; ++i) {
      const DensityMatrix rho =
          sample_density(cfg, static_cast<std::uint64_t>(2 * i));
      const DensityMatrix sigma =
          sample_density(cfg, static_cast<std::uint64_t>(2 * i + 1));
      const ProbVector lam_rho =
          ProbVector::from_spectrum(eig_hermitian(rho.mat()).values);
      const ProbVector lam_sigma =
          ProbVector::from_spectrum(eig_hermitian(sigma.mat()).values);
      const auto [t_min, t_max] = permutation_extremes(lam_rho, lam_sigma);
      const double t = trace_distance(rho, sigma);
      worst = std::max(worst, std::max(t_min - t, t - t_max));
      if (!(t >= t_min - 1e-10 && t <= t_max + 1e-10)) ++failures;
    }
    report.checks.push_back(
        {"mirsky d=" + std::to_string(dim) + " pairs=" +
             std::to_string(params.samples),
         failures == 0, std::max(worst, 0.0), 1e-10,
         std::to_string(failures) + " pairs outside bracket"});
  }
}

}  // namespace

VerifyReport run_verify(VerifySuite suite, const VerifyParams& params) {
  if (params.grid_points < 2)
    throw OutOfRange("grid_points must be at least 2");
  if (params.samples < 1) throw OutOfRange("samples must be at least 1");
  VerifyReport report;
  if (suite == VerifySuite::saturation || suite == VerifySuite::all)
    run_saturation(params, report);
  if (suite == VerifySuite::staged || suite == VerifySuite::all)
    run_staged(params, report);
  if (suite == VerifySuite::oracle || suite == VerifySuite::all)
    run_oracle(params, report);
  if (suite == VerifySuite::mirsky || suite == VerifySuite::all)
    run_mirsky(params, report);
  return report;
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
  for (const CheckResult& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%s %-28s residual=%.3e tol=%.1e  %s",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                  c.tolerance, c.detail.c_str());
    out << line << '\n';
  }
  out << (report.all_pass() ? "all checks passed" : "CHECKS FAILED") << '\n';
}

}  // namespace vne
