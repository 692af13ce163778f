// End-to-end tests of the command-line binary: each case shells out to the
// built executable and inspects exit codes, files, and captured streams.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include <sys/wait.h>

namespace {

const std::string kCli = VNE_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_tmp_stdout.txt";
  const std::string err_path = "cli_tmp_stderr.txt";
  const std::string cmd =
      '"' + kCli + "\" " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("scatter writes deterministic csv files") {
  auto a = run_cli("scatter --dim 2 --samples 50 --seed 7 --out cli_tmp_a.csv");
  auto b = run_cli("scatter --dim 2 --samples 50 --seed 7 --out cli_tmp_b.csv");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  const std::string fa = slurp("cli_tmp_a.csv");
  const std::string fb = slurp("cli_tmp_b.csv");
  CHECK(fa == fb);
  CHECK(fa.rfind("t,delta\n", 0) == 0);
  CHECK(count_occurrences(fa, "\n") == 51);
  std::remove("cli_tmp_a.csv");
  std::remove("cli_tmp_b.csv");
}

TEST_CASE("a different seed changes the records") {
  auto a = run_cli("scatter --dim 2 --samples 20 --seed 1");
  auto b = run_cli("scatter --dim 2 --samples 20 --seed 2");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out != b.out);
}

TEST_CASE("scatter svg has the contractual element counts") {
  auto r = run_cli(
      "scatter --dim 3 --samples 40 --seed 5 --out cli_tmp_s.csv "
      "--svg cli_tmp_s.svg");
  CHECK(r.exit_code == 0);
  const std::string svg = slurp("cli_tmp_s.svg");
  CHECK(count_occurrences(svg, "<circle") == 40);
  CHECK(count_occurrences(svg, "<path") == 2);
  CHECK(count_occurrences(svg, "<line") == 2);
  std::remove("cli_tmp_s.csv");
  std::remove("cli_tmp_s.svg");
}

TEST_CASE("injected violation aborts with exit code 1 and coordinates") {
  auto r = run_cli("scatter --dim 2 --samples 40 --seed 9 "
                   "--inject-violation-at 5 --out cli_tmp_v.csv");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("bound violation") != std::string::npos);
  CHECK(r.err.find("seed=9") != std::string::npos);
  CHECK(r.err.find("index=5") != std::string::npos);
  std::remove("cli_tmp_v.csv");
}

TEST_CASE("bounds table with explicit t values is byte exact") {
  auto r = run_cli("bounds --dim 2 --t 0 --t 0.5");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "t,fannes,fannes_weak,sharp\n"
        "0,0,0.530737845423,0\n"
        "0.5,,1.53073784542,1\n");
}

TEST_CASE("bounds table grid row count") {
  auto r = run_cli("bounds --dim 4 --grid-step 0.1");
  CHECK(r.exit_code == 0);
  CHECK(count_occurrences(r.out, "\n") == 12);  // header + t = 0.0 .. 1.0
  CHECK(r.out.rfind("t,fannes,fannes_weak,sharp\n", 0) == 0);
}

TEST_CASE("verify saturation passes and reports") {
  auto r = run_cli("verify saturation --dim 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS saturation d=2") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify mirsky on a short run passes") {
  auto r = run_cli("verify mirsky --dim 2 --samples 200");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS mirsky d=2") != std::string::npos);
}

TEST_CASE("oracle prints the search outcome") {
  auto r = run_cli("oracle --dim 2 --t 0.5 --grid-step 0.01");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("max entropy difference") != std::string::npos);
  CHECK(r.out.find("argmax p:") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);                      // missing subcommand
  CHECK(run_cli("scatter --bogus-flag").exit_code == 2);  // unknown flag
  CHECK(run_cli("scatter --dim 1").exit_code == 2);       // below range
  CHECK(run_cli("scatter --dim 99").exit_code == 2);      // above range
  CHECK(run_cli("scatter --samples 0").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);            // unknown subcommand
}

TEST_CASE("domain errors exit with code 2 and explain themselves") {
  auto measure = run_cli("scatter --measure bogus --samples 5");
  CHECK(measure.exit_code == 2);
  CHECK(measure.err.find("unknown measure") != std::string::npos);

  auto suite = run_cli("verify everything");
  CHECK(suite.exit_code == 2);
  CHECK(suite.err.find("unknown verify suite") != std::string::npos);

  auto step = run_cli("oracle --dim 2 --t 0.5 --grid-step 0.003");
  CHECK(step.exit_code == 2);
  CHECK(step.err.find("error:") != std::string::npos);

  auto path = run_cli("bounds --out cli_tmp_nodir/x.csv");
  CHECK(path.exit_code == 2);
  CHECK(path.err.find("cannot open output file") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  auto r = run_cli("scatter --help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("--samples") != std::string::npos);
}
