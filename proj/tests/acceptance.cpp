// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "nraprove/bench/bench.hpp"
#include "nraprove/formula/parser.hpp"
#include "nraprove/induction/catalog.hpp"
#include "nraprove/induction/engine.hpp"
#include "nraprove/preprocess/preprocess.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace nraprove;
using smtlib::SolverConfig;
using smtlib::SolverStatus;
using nraprove::testing::Gen;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kProductLimitS = 10.0;
constexpr double kRationalSumLimitS = 30.0;
constexpr double kFixedJLimitS = 60.0;
constexpr double kHarnessLimitS = 1.0;
constexpr double kHarnessMinS = 1.0;
constexpr double kHarnessMaxS = 2.0;
constexpr int kClearedAtoms = 1000;
constexpr int kPointsPerAtom = 100;
constexpr int kRadicalPolys = 500;
constexpr int kRadicalMaxDegree = 40;
constexpr int kSurvivalSets = 10000;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Check {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

// First installed solver: z3 from PATH, else the bundled cvc5 driver.
std::optional<SolverConfig> installed_solver() {
  if (nraprove::testing::on_path("z3")) return SolverConfig{"z3", {"z3", "-smt2", "{file}"}, true};
  const std::string driver = std::string(NRAPROVE_SOURCE_DIR) + "/tools/solvers/cvc5_driver.py";
  if (nraprove::testing::on_path("python3") && std::system(("python3 -c 'import cvc5' 2>/dev/null")) == 0)
    return SolverConfig{"cvc5", {"python3", driver, "{file}"}, true};
  return std::nullopt;
}

InductionConfig config_for(const SolverConfig& solver, double timeout_s) {
  InductionConfig cfg;
  cfg.solver = solver;
  cfg.timeout_s = timeout_s;
  return cfg;
}

bool proved_at(const ProofOutcome& out, unsigned t, unsigned r) {
  auto* p = std::get_if<outcome::Proved>(&out.result);
  return p && p->t == t && p->r == r;
}

int run_cli_binary(const std::vector<std::string>& args) {
  std::string cmd = "'" + std::string(NRAPROVE_CLI_PATH) + "'";
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch_dir(const std::string& tag) {
  auto dir = fs::temp_directory_path() / ("nraprove_accept_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Check product_claim(const std::optional<SolverConfig>& solver) {
  Check c;
  // Golden serialization, end to end through the CLI.
  auto dir = scratch_dir("golden");
  auto script_path = dir / "product.smt2";
  if (run_cli_binary({"translate", "product", "--strategy", "bdc", "--r", "1", "-o", script_path.string()}) != 0)
    c.fail("translate failed");
  std::string script = read_file(script_path);
  if (script != read_file(std::string(NRAPROVE_GOLDEN_DIR) + "/product_r1_bdc.smt2")) c.fail("script differs from golden");
  if (script.find("(assert (> (- (* Z x_s1) 1) 0))") == std::string::npos) c.fail("missing Z*s(x) > 1 conjunct");
  fs::remove_all(dir);

  if (!solver) {
    c.fail("no QF_NRA solver installed");
    return c;
  }
  auto t0 = Clock::now();
  auto out = prove(product_problem(), config_for(*solver, kProductLimitS));
  double elapsed = since(t0);
  if (!proved_at(out, 1, 1)) c.fail(out.summary());
  if (elapsed >= kProductLimitS) c.fail("took " + std::to_string(elapsed) + " s");
  if (c.ok) c.note = solver->name + ", " + std::to_string(elapsed) + " s";
  return c;
}

Check rational_sums(const std::optional<SolverConfig>& solver) {
  Check c;
  if (!solver) {
    c.fail("no QF_NRA solver installed");
    return c;
  }
  int runs = 0;
  double slowest = 0;
  for (const auto& p : {rational_sum_problem(), weighted_sum_problem()}) {
    for (Strategy s : kAllStrategies) {
      auto cfg = config_for(*solver, kRationalSumLimitS);
      cfg.strategy = s;
      auto t0 = Clock::now();
      auto out = prove(p, cfg);
      double elapsed = since(t0);
      slowest = std::max(slowest, elapsed);
      ++runs;
      std::string tag = p.name + "/" + std::string(strategy_name(s));
      if (!proved_at(out, 1, 1)) c.fail(tag + ": " + out.summary());
      if (elapsed >= kRationalSumLimitS) c.fail(tag + " took " + std::to_string(elapsed) + " s");
    }
  }
  if (c.ok) c.note = std::to_string(runs) + " runs, slowest " + std::to_string(slowest) + " s";
  return c;
}

Check fixed_j(const std::optional<SolverConfig>& solver) {
  Check c;
  if (!solver) {
    c.fail("no QF_NRA solver installed");
    return c;
  }
  SolverConfig quiet = *solver;
  quiet.models = false;
  for (int j = 1; j <= 5; ++j) {
    ProblemSpec p = power_weighted_problem(j);
    QueryOptions q;
    q.strategy = p.strategy;
    q.comments = {"problem: " + p.name, "query: refutation r=1"};
    auto res = smtlib::run_solver(compile_query(build_refutation(p, 1), q), quiet, kFixedJLimitS);
    if (res.status != SolverStatus::Unsat)
      c.fail("j=" + std::to_string(j) + ": " + std::string(smtlib::status_name(res.status)));
    if (res.wall_time_s >= kFixedJLimitS) c.fail("j=" + std::to_string(j) + " exceeded the limit");
  }
  return c;
}

Check altered_claim(const std::optional<SolverConfig>& solver) {
  Check c;
  ProblemSpec p = make_problem("product_ge2", 1, {{"X", "1", "X + 1"}, {"Y", "x", "Y + s(x)"}, {"Z", "x", "Z*s(x)"}},
                               {"x > 0", "X = Y"}, "Z >= 2");
  // Oracle: [Z]_1 = x_1, and X = Y at index 1 reads 1 = x_1.
  if (unroll_initial(p, 1).at("Z") != parse_expression("x_1")) c.fail("[Z]_1 is not x_1");
  if (!solver) {
    c.fail("no QF_NRA solver installed");
    return c;
  }
  auto out = prove(p, config_for(*solver, kProductLimitS));
  auto* f = std::get_if<outcome::FailedInitial>(&out.result);
  if (!f || f->k != 1) {
    c.fail(out.summary());
    return c;
  }
  if (!f->witness || !f->witness->count("x_1")) {
    c.fail("no witness for x_1");
    return c;
  }
  auto value = smtlib::model_value(f->witness->at("x_1"));
  if (!value || *value != 1) c.fail("witness x_1=" + f->witness->at("x_1"));
  return c;
}

// Random polynomial whose every term has total degree <= max_deg.
Polynomial bounded_polynomial(Gen& gen, const std::vector<std::string>& vars, int max_deg, int max_terms) {
  Polynomial p;
  int terms = gen.integer(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    std::vector<unsigned> exps(vars.size(), 0);
    int deg = gen.integer(0, max_deg);
    for (int d = 0; d < deg; ++d) ++exps[gen.integer(0, static_cast<int>(vars.size()) - 1)];
    std::vector<Monomial::Factor> factors;
    for (std::size_t v = 0; v < vars.size(); ++v) factors.emplace_back(vars[v], exps[v]);
    p += Polynomial::term(gen.rational(), Monomial(std::move(factors)));
  }
  return p;
}

Check transformation_equivalence() {
  Check c;
  Gen gen(9005);
  const std::vector<std::string> all{"x", "y", "z"};
  long compared = 0, on_poles = 0, discrepancies = 0;
  for (int i = 0; i < kClearedAtoms; ++i) {
    std::vector<std::string> vars(all.begin(), all.begin() + gen.integer(1, 3));
    Polynomial num = bounded_polynomial(gen, vars, 4, 4);
    Polynomial den;
    do den = bounded_polynomial(gen, vars, 4, 3);
    while (den.is_zero());
    ClearedAtom a = normalize_atom(RationalFunction::normalize(num, den), static_cast<RelOp>(gen.integer(0, 5)), 0);
    Formula bdc = clear_bdc(a), ddc = clear_ddc(a);
    RationalFunction rf = RationalFunction::normalize(a.f, a.g);
    for (int j = 0; j < kPointsPerAtom; ++j) {
      Assignment pt = gen.point(vars, 3, 2);
      Truth tb = eval_formula(bdc, pt), td = eval_formula(ddc, pt);
      if (tb == Truth::Undefined || tb != td) {
        ++discrepancies;
        continue;
      }
      if (a.g.eval(pt) == 0) {
        ++on_poles;
        continue;
      }
      auto v = rf.eval(pt);
      if (!v || (tb == Truth::True) != holds(a.op, sgn(*v))) ++discrepancies;
      ++compared;
    }
  }
  if (discrepancies) c.fail(std::to_string(discrepancies) + " discrepancies");
  c.note = std::to_string(compared) + " defined points, " + std::to_string(on_poles) + " on poles";
  return c;
}

Check radical_encoding(const std::optional<SolverConfig>& solver) {
  Check c;
  Gen gen(9006);
  const Polynomial y = Polynomial::variable("y");
  const Polynomial modulus = y.pow(2) - 5;
  for (int i = 0; i < kRadicalPolys; ++i) {
    Polynomial p;
    int deg = gen.integer(0, kRadicalMaxDegree);
    int terms = gen.integer(1, 8);
    for (int t = 0; t < terms; ++t) p += y.pow(gen.integer(0, deg)).scaled(gen.rational());
    p += y.pow(deg).scaled(gen.nonzero_rational());
    Polynomial r = reduce_mod_quadratic(p, "y", 5);
    if (r.degree("y") > 1) c.fail("deg_y > 1 for " + p.to_string());
    if (!divide_exact(p - r, modulus)) c.fail("y^2 - 5 does not divide p - result");
  }
  if (!solver) {
    c.fail("no QF_NRA solver installed");
    return c;
  }
  std::string summaries[2];
  for (bool reduce : {true, false}) {
    auto cfg = config_for(*solver, kRationalSumLimitS);
    cfg.reduce_radicals = reduce;
    auto out = prove(lucas_problem(), cfg);
    if (!out.proved()) c.fail(std::string("reduction ") + (reduce ? "on" : "off") + ": " + out.summary());
    summaries[reduce] = out.summary();
  }
  if (summaries[0] != summaries[1]) c.fail("outcomes differ: " + summaries[1] + " vs " + summaries[0]);
  if (c.ok) c.note = summaries[1] + " both ways";
  return c;
}

Check survival() {
  using bench::BenchRecord;
  Check c;
  std::vector<BenchRecord> fixed{{"a", "guard", "s", SolverStatus::Unsat, 3},
                                 {"b", "guard", "s", SolverStatus::Unsat, 1},
                                 {"c", "guard", "s", SolverStatus::Sat, 2},
                                 {"d", "guard", "s", SolverStatus::Timeout, 1200}};
  std::vector<std::pair<std::size_t, double>> expected{{1, 1}, {2, 3}, {3, 6}};
  if (bench::survival_series(fixed, "s").points != expected) c.fail("oracle series mismatch");

  Gen gen(9007);
  const SolverStatus statuses[] = {SolverStatus::Sat, SolverStatus::Unsat, SolverStatus::Unknown,
                                   SolverStatus::Timeout, SolverStatus::Error};
  for (int i = 0; i < kSurvivalSets && c.ok; ++i) {
    std::vector<BenchRecord> records;
    std::size_t kept = 0;
    int n = gen.integer(0, 25);
    for (int j = 0; j < n; ++j) {
      SolverStatus s = statuses[gen.integer(0, 4)];
      records.push_back({"p" + std::to_string(j), "guard", "s", s, gen.integer(0, 1200000) / 1000.0});
      if (s != SolverStatus::Timeout && s != SolverStatus::Error) ++kept;
    }
    auto pts = bench::survival_series(records, "s").points;
    if (pts.size() != kept) c.fail("set " + std::to_string(i) + ": wrong point count");
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (pts[k].first != k + 1) c.fail("set " + std::to_string(i) + ": k not consecutive");
      if (k > 0 && pts[k].second < pts[k - 1].second) c.fail("set " + std::to_string(i) + ": not monotone");
      double step = k ? pts[k].second - pts[k - 1].second : pts[k].second;
      double prev_step = k > 1 ? pts[k - 1].second - pts[k - 2].second : (k ? pts[0].second : 0);
      // Sorted ascending: each increment at least the previous one.
      if (k > 0 && step + 1e-9 < prev_step) c.fail("set " + std::to_string(i) + ": increments not ascending");
    }
  }
  return c;
}

bool process_alive(long pid) {
  std::ifstream stat("/proc/" + std::to_string(pid) + "/stat");
  if (!stat) return false;
  std::string line;
  std::getline(stat, line);
  auto close = line.rfind(')');
  return close != std::string::npos && close + 2 < line.size() && line[close + 2] != 'Z';
}

Check harness_timeout() {
  Check c;
  auto dir = scratch_dir("sleep");
  const std::string pidfile = (dir / "pids").string();
  SolverConfig sleeper{"sleeper", {"/bin/sh", std::string(NRAPROVE_TEST_DATA) + "/fake_sleep.sh", "{file}", pidfile}};
  auto res = smtlib::run_solver("(check-sat)\n", sleeper, kHarnessLimitS);
  if (res.status != SolverStatus::Timeout) c.fail(std::string("status ") + std::string(smtlib::status_name(res.status)));
  if (res.wall_time_s < kHarnessMinS || res.wall_time_s > kHarnessMaxS)
    c.fail("recorded " + std::to_string(res.wall_time_s) + " s");
  std::ifstream in(pidfile);
  long pid;
  int pids = 0;
  while (in >> pid) {
    ++pids;
    if (process_alive(pid)) c.fail("pid " + std::to_string(pid) + " survived");
  }
  if (pids != 2) c.fail("expected 2 pids, read " + std::to_string(pids));
  if (c.ok) c.note = "timeout after " + std::to_string(res.wall_time_s) + " s";
  fs::remove_all(dir);
  return c;
}

Check determinism() {
  Check c;
  auto dir = scratch_dir("determinism");
  int files = 0;
  for (const auto& p : example_problems()) {
    for (Strategy s : kAllStrategies) {
      std::string base = p.name + "." + std::string(strategy_name(s));
      auto first = dir / (base + ".1.smt2"), second = dir / (base + ".2.smt2");
      for (const auto& out : {first, second})
        if (run_cli_binary({"translate", p.name, "--strategy", std::string(strategy_name(s)), "-o", out.string()}) != 0)
          c.fail("translate failed for " + base);
      std::string a = read_file(first);
      if (a.empty() || a != read_file(second)) c.fail(base + " differs between runs");
      ++files;
    }
  }
  if (c.ok) c.note = std::to_string(files) + " scripts byte-identical";
  fs::remove_all(dir);
  return c;
}

} // namespace

int main() {
  const auto solver = installed_solver();
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"product claim proved at t=1, r=1 with golden script", [&] { return product_claim(solver); }},
      {"rational-sum claims proved under guard, bdc, ddc", [&] { return rational_sums(solver); }},
      {"fixed-j refutations unsat for j=1..5", [&] { return fixed_j(solver); }},
      {"altered claim Z >= 2 fails at k=1 with x_1=1", [&] { return altered_claim(solver); }},
      {"bdc, ddc and rational truth agree", transformation_equivalence},
      {"radical reduction and sqrt(5) problem", [&] { return radical_encoding(solver); }},
      {"survival series oracle and monotonicity", survival},
      {"solver timeout kills the process group", harness_timeout},
      {"translate is deterministic", determinism}};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = Clock::now();
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu: %s (%s%s%.2f s)\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, c.note.c_str(),
                c.note.empty() ? "" : "; ", since(t0));
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
