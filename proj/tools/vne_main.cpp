// Command-line front end: scatter experiments over random state pairs,
// bound tables, verification suites, and the brute-force grid search.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vne/bounds.hpp"
#include "vne/classical_opt.hpp"
#include "vne/errors.hpp"
#include "vne/experiment.hpp"
#include "vne/sampling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// Output sink: "-" (or empty) means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw vne::OutOfRange("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct ScatterOptions {
  vne::ScatterParams params;
  std::string measure = "rank_mixture";
  std::string out = "-";
  std::string svg;
};

struct BoundsOptions {
  int dim = 2;
  double grid_step = 0.01;
  std::vector<double> t_values;
  std::string out = "-";
};

struct VerifyOptions {
  std::string suite = "all";
  std::vector<int> dims;
  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  int grid_points = 101;
};

struct OracleOptions {
  int dim = 2;
  double t = 0.5;
  double grid_step = 0.01;
  std::string out = "-";
};

int run_scatter_cmd(ScatterOptions& opt) {
  opt.params.measure = vne::parse_measure(opt.measure);
  const std::vector<vne::ScatterRecord> records = vne::run_scatter(opt.params);
  Output out(opt.out);
  vne::write_scatter_csv(out.stream(), records);
  if (!opt.svg.empty()) {
    std::ofstream svg(opt.svg);
    if (!svg) throw vne::OutOfRange("cannot open SVG file '" + opt.svg + "'");
    vne::write_scatter_svg(svg, opt.params.dim, records);
  }
  return kExitOk;
}

int run_bounds_cmd(const BoundsOptions& opt) {
  std::vector<double> ts = opt.t_values;
  if (ts.empty()) {
    if (!(opt.grid_step > 0.0 && opt.grid_step <= 1.0))
      throw vne::OutOfRange("grid step must lie in (0, 1]");
    for (double t = 0.0; t < 1.0 + opt.grid_step / 2.0; t += opt.grid_step)
      ts.push_back(std::min(t, 1.0));
  }
  const auto rows = vne::emit_bound_table(opt.dim, ts);
  Output out(opt.out);
  vne::write_bound_table_csv(out.stream(), rows);
  return kExitOk;
}

int run_verify_cmd(const VerifyOptions& opt) {
  vne::VerifyParams params;
  params.dims = opt.dims;
  params.samples = opt.samples;
  params.seed = opt.seed;
  params.grid_points = opt.grid_points;
  const vne::VerifyReport report =
      vne::run_verify(vne::parse_suite(opt.suite), params);
  vne::print_verify_report(std::cout, report);
  return report.all_pass() ? kExitOk : kExitVerificationFailure;
}

int run_oracle_cmd(const OracleOptions& opt) {
  const vne::OracleResult r =
      vne::brute_force_max_diff(opt.dim, opt.t, opt.grid_step);
  Output out(opt.out);
  std::ostream& os = out.stream();
  os << "dim " << opt.dim << ", t " << opt.t << ", grid step " << r.grid_step
     << '\n';
  os << "max entropy difference " << r.max_diff << '\n';
  os << "bound at t " << vne::sharp_bound(opt.dim, opt.t) << '\n';
  os << "argmax p:";
  for (int i = 0; i < r.argmax_p.dim(); ++i) os << ' ' << r.argmax_p[i];
  os << "\nargmax q:";
  for (int i = 0; i < r.argmax_q.dim(); ++i) os << ' ' << r.argmax_q[i];
  os << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy continuity bounds for quantum states: scatter "
               "experiments, bound tables, and verification suites"};
  app.require_subcommand(1);

  ScatterOptions scatter;
  CLI::App* scatter_cmd = app.add_subcommand(
      "scatter", "sample random state pairs and emit (distance, entropy "
                 "difference) records");
  scatter_cmd->add_option("--dim", scatter.params.dim, "Hilbert space dimension")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  scatter_cmd->add_option("--samples", scatter.params.samples, "number of pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scatter_cmd->add_option("--seed", scatter.params.seed, "RNG seed")
      ->capture_default_str();
  scatter_cmd
      ->add_option("--measure", scatter.measure,
                   "hilbert_schmidt | pure | rank_mixture")
      ->capture_default_str();
  scatter_cmd->add_option("--out", scatter.out, "CSV output path ('-' = stdout)")
      ->capture_default_str();
  scatter_cmd->add_option("--svg", scatter.svg, "also write an SVG plot here");
  scatter_cmd
      ->add_option("--inject-violation-at", scatter.params.inject_violation_at,
                   "force a bound violation at this record index (testing)")
      ->group("");

  BoundsOptions bounds;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "emit a bound table as CSV");
  bounds_cmd->add_option("--dim", bounds.dim, "Hilbert space dimension")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  bounds_cmd->add_option("--grid-step", bounds.grid_step, "t grid step")
      ->capture_default_str();
  bounds_cmd->add_option("--t", bounds.t_values,
                         "explicit t values (repeatable; overrides the grid)");
  bounds_cmd->add_option("--out", bounds.out, "CSV output path ('-' = stdout)")
      ->capture_default_str();

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  verify_cmd
      ->add_option("suite", verify.suite,
                   "saturation | staged | oracle | mirsky | all")
      ->capture_default_str();
  verify_cmd->add_option("--dim", verify.dims,
                         "restrict to these dimensions (repeatable)");
  verify_cmd->add_option("--samples", verify.samples,
                         "sampled pairs per dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "RNG seed")
      ->capture_default_str();

  OracleOptions oracle;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force the maximal entropy difference on the simplex "
                "grid");
  oracle_cmd->add_option("--dim", oracle.dim, "dimension (2 or 3)")
      ->check(CLI::Range(2, 3))
      ->capture_default_str();
  oracle_cmd->add_option("--t", oracle.t, "target total-variation distance")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  oracle_cmd->add_option("--grid-step", oracle.grid_step, "simplex grid step")
      ->capture_default_str();
  oracle_cmd->add_option("--out", oracle.out, "output path ('-' = stdout)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (scatter_cmd->parsed()) return run_scatter_cmd(scatter);
    if (bounds_cmd->parsed()) return run_bounds_cmd(bounds);
    if (verify_cmd->parsed()) return run_verify_cmd(verify);
    if (oracle_cmd->parsed()) return run_oracle_cmd(oracle);
  } catch (const vne::BoundViolation& e) {
    std::cerr << "bound violation: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const vne::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
