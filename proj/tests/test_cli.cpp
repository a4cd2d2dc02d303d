#include "nraprove/bench/bench.hpp"
#include "nraprove/cli/cli.hpp"
#include "nraprove/induction/catalog.hpp"
#include "nraprove/induction/problem.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nraprove;
namespace fs = std::filesystem;

namespace {

const std::string kData = NRAPROVE_TEST_DATA;
const std::string kGolden = NRAPROVE_GOLDEN_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nraprove");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path temp_dir(const std::string& tag) {
  auto dir = fs::temp_directory_path() / ("nraprove_cli_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// A solver config file naming fake solvers from the test data directory.
fs::path solver_file(const fs::path& dir) {
  auto path = dir / "solvers.json";
  std::ofstream(path) << "[{\"name\": \"fake\", \"cmd\": [\"" << kData << "/fake_unsat.sh\", \"{file}\"]},\n"
                      << " {\"name\": \"byname\", \"cmd\": [\"" << kData << "/fake_by_name.sh\", \"{file}\"]},\n"
                      << " {\"name\": \"gone\", \"cmd\": [\"/nonexistent/solver\", \"{file}\"]}]\n";
  return path;
}

} // namespace

TEST(Cli, TranslateMatchesGoldenScript) {
  auto dir = temp_dir("golden");
  auto r = cli({"translate", "product", "--strategy", "bdc", "--r", "1", "-o", (dir / "p.smt2").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(read_file(dir / "p.smt2"), read_file(kGolden + "/product_r1_bdc.smt2"));
  fs::remove_all(dir);
}

TEST(Cli, TranslateToStdoutIsDeterministic) {
  auto a = cli({"translate", "harmonic", "--strategy", "ddc", "--r", "2"});
  auto b = cli({"translate", "harmonic", "--strategy", "ddc", "--r", "2"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("(check-sat)"), std::string::npos);
  auto init = cli({"translate", "product", "--initial", "2", "--models"});
  ASSERT_EQ(init.code, kExitOk) << init.err;
  EXPECT_NE(init.out.find("initial condition k=2"), std::string::npos);
  EXPECT_NE(init.out.find("(get-model)"), std::string::npos);
}

TEST(Cli, TranslateReadsProblemFiles) {
  auto dir = temp_dir("file");
  bench::write_text_file(dir / "p.json", problem_to_json(product_problem()));
  auto from_file = cli({"translate", (dir / "p.json").string()});
  auto builtin = cli({"translate", "product"});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_EQ(from_file.out, builtin.out);
  bench::write_text_file(dir / "bad.json", "{\"name\": \"bad\", \"sequence_vars\": [], \"claim\": \"W > 0\"}");
  auto bad = cli({"translate", (dir / "bad.json").string()});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, ExamplesWritesProblemsAndScripts) {
  auto dir = temp_dir("examples");
  auto r = cli({"examples", "-o", dir.string(), "--scripts"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const auto& p : example_problems()) {
    ASSERT_TRUE(fs::exists(dir / (p.name + ".json"))) << p.name;
    EXPECT_EQ(load_problem(dir / (p.name + ".json")).claim, p.claim);
    for (const char* s : {"guard", "bdc", "ddc"}) EXPECT_TRUE(fs::exists(dir / (p.name + "." + s + ".smt2")));
  }
  fs::remove_all(dir);
}

TEST(Cli, ProveWithConfiguredFakeSolver) {
  auto dir = temp_dir("prove");
  auto cfg = solver_file(dir);
  auto ok = cli({"prove", "product", "--solvers", cfg.string(), "--solver", "fake"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.out.substr(0, ok.out.find('\n')), "Proved at t=1, r=1");
  EXPECT_NE(ok.out.find("refutation r=1: unsat"), std::string::npos);

  auto failing = cli({"prove", "harmonic", "--solvers", cfg.string(), "--solver", "byname"});
  EXPECT_EQ(failing.code, kExitNotProved);
  EXPECT_NE(failing.out.find("Initial condition fails at k=1"), std::string::npos);

  auto spawn = cli({"prove", "product", "--solvers", cfg.string(), "--solver", "gone"});
  EXPECT_EQ(spawn.code, kExitSpawnFailure);

  auto unknown = cli({"prove", "product", "--solvers", cfg.string(), "--solver", "nope"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("unknown solver"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, SolverConfigFromEnvironment) {
  auto dir = temp_dir("env");
  auto cfg = solver_file(dir);
  ::setenv("NRAPROVE_SOLVERS", cfg.string().c_str(), 1);
  auto r = cli({"prove", "product", "--solver", "fake"});
  ::unsetenv("NRAPROVE_SOLVERS");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  fs::remove_all(dir);
}

TEST(Cli, BenchWritesOutputsAndFlagsDisagreement) {
  auto dir = temp_dir("bench");
  auto cfg = solver_file(dir);
  auto out = dir / "out";
  auto r = cli({"bench", "--solvers", cfg.string(), "--solver", "fake", "--solver", "byname", "--strategies",
                "guard,ddc", "--timeout", "10", "-o", out.string()});
  EXPECT_EQ(r.code, kExitDisagreement) << r.err;
  auto records = bench::read_records_csv(out / "results.csv");
  EXPECT_EQ(records.size(), example_problems().size() * 2 * 2);
  EXPECT_TRUE(fs::exists(out / "matrix.csv"));
  EXPECT_TRUE(fs::exists(out / "survival.svg"));

  auto survival = cli({"plot", (out / "results.csv").string()});
  EXPECT_EQ(survival.code, kExitOk) << survival.err;
  EXPECT_TRUE(fs::exists(out / "survival.svg"));
  auto scatter = cli({"plot", (out / "results.csv").string(), "--kind", "scatter", "--a", "fake", "--b", "byname",
                      "-o", (dir / "s.svg").string()});
  EXPECT_EQ(scatter.code, kExitDisagreement);
  EXPECT_TRUE(fs::exists(dir / "s.svg"));
  auto missing = cli({"plot", (out / "results.csv").string(), "--kind", "scatter", "--a", "fake", "--b", "z9"});
  EXPECT_EQ(missing.code, kExitUsage);
  fs::remove_all(dir);
}

TEST(Cli, PlotOfEmptyResultsSucceeds) {
  auto dir = temp_dir("empty");
  bench::write_records_csv({}, dir / "results.csv");
  auto r = cli({"plot", (dir / "results.csv").string(), "-o", (dir / "plot.svg").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(read_file(dir / "plot.svg").find("</svg>"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"prove"}).code, kExitUsage);
  EXPECT_EQ(cli({"translate", "product", "--strategy", "magic"}).code, kExitUsage);
  EXPECT_EQ(cli({"translate", "product", "--reduce-radicals", "maybe"}).code, kExitUsage);
  EXPECT_EQ(cli({"translate", "no_such_problem"}).code, kExitUsage);
  EXPECT_EQ(cli({"plot", "/nonexistent.csv"}).code, kExitUsage);
  EXPECT_EQ(cli({"plot", "/dev/null", "--kind", "scatter"}).code, kExitUsage);
}

TEST(Cli, HelpListsTheFlags) {
  struct Case {
    const char* cmd;
    std::vector<std::string> flags;
  };
  std::vector<Case> cases{
      {"prove", {"--solver", "--solvers", "--max-r", "--timeout", "--strategy", "--reduce-radicals", "--abort-on-timeout"}},
      {"translate", {"--output", "--strategy", "--r", "--initial", "--reduce-radicals", "--models"}},
      {"bench", {"--problems", "--solvers", "--solver", "--strategies", "--timeout", "--jobs", "--r", "--output"}},
      {"plot", {"--kind", "--a", "--b", "--timeout", "--output"}},
      {"examples", {"--output", "--scripts", "--r"}}};
  for (const auto& c : cases) {
    auto r = cli({c.cmd, "--help"});
    EXPECT_EQ(r.code, kExitOk) << c.cmd;
    for (const auto& f : c.flags) EXPECT_NE(r.out.find(f), std::string::npos) << c.cmd << " " << f;
  }
}
