#include "nraprove/cli/cli.hpp"

#include "nraprove/bench/bench.hpp"
#include "nraprove/errors.hpp"
#include "nraprove/induction/catalog.hpp"
#include "nraprove/induction/engine.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>

namespace nraprove {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSolversEnv = "NRAPROVE_SOLVERS";

struct SolverFlags {
  std::string file;

  std::vector<smtlib::SolverConfig> load() const {
    if (!file.empty()) return smtlib::load_solver_configs(file);
    if (const char* env = std::getenv(kSolversEnv); env && *env) return smtlib::load_solver_configs(env);
    return smtlib::default_solver_configs();
  }
};

smtlib::SolverConfig find_solver(const std::vector<smtlib::SolverConfig>& all, const std::string& name) {
  std::string known;
  for (const auto& c : all) {
    if (c.name == name) return c;
    known += (known.empty() ? "" : ", ") + c.name;
  }
  throw Error("unknown solver '" + name + "' (configured: " + known + ")");
}

// A problem file, or the name of a built-in example.
ProblemSpec load_problem_arg(const std::string& arg) {
  if (fs::exists(arg)) return load_problem(arg);
  if (auto p = find_example(arg)) return *p;
  throw Error("no problem file or built-in example named '" + arg + "'");
}

Strategy strategy_arg(const std::string& s) { return *parse_strategy(s); }

std::string seconds(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", t);
  return buf;
}

void add_solver_file_flag(CLI::App* app, SolverFlags& flags) {
  app->add_option("--solvers", flags.file,
                  std::string("Solver config JSON [{\"name\",\"cmd\",\"models\"}]; defaults to $") + kSolversEnv +
                      ", then z3/cvc5/yices-smt2 from PATH")
      ->check(CLI::ExistingFile);
}

const auto kStrategyCheck = CLI::IsMember({"guard", "bdc", "ddc"});
const auto kOnOffCheck = CLI::IsMember({"on", "off"});

struct ProveArgs {
  std::string problem;
  std::string solver = "z3";
  SolverFlags solvers;
  unsigned max_r = 5;
  double timeout = 1200.0;
  std::string strategy;
  std::string reduce = "on";
  bool abort_on_timeout = false;
};

int do_prove(const ProveArgs& a, std::ostream& out) {
  ProblemSpec p = load_problem_arg(a.problem);
  InductionConfig cfg;
  cfg.solver = find_solver(a.solvers.load(), a.solver);
  cfg.max_r = a.max_r;
  cfg.timeout_s = a.timeout;
  cfg.abort_on_timeout = a.abort_on_timeout;
  cfg.reduce_radicals = a.reduce == "on";
  if (!a.strategy.empty()) cfg.strategy = strategy_arg(a.strategy);

  ProofOutcome res = prove(p, cfg);
  out << res.summary() << "\n";
  out << "trace (" << p.name << ", solver " << cfg.solver.name << ", strategy "
      << strategy_name(cfg.strategy.value_or(p.strategy)) << "):\n";
  for (const auto& e : res.trace) {
    out << "  " << e.description << ": " << smtlib::status_name(e.result.status) << " ("
        << seconds(e.result.wall_time_s) << ")";
    if (!e.result.detail.empty()) out << " - " << e.result.detail;
    out << "\n";
  }
  if (auto* u = std::get_if<outcome::Unknown>(&res.result); u && u->witness) {
    out << "last induction-step witness:";
    for (const auto& [v, val] : *u->witness) out << " " << v << "=" << val;
    out << "\n";
  }
  if (res.proved()) return kExitOk;
  if (auto* e = std::get_if<outcome::SolverError>(&res.result); e && e->spawn_failed) return kExitSpawnFailure;
  return kExitNotProved;
}

struct TranslateArgs {
  std::string problem;
  std::string output;
  std::string strategy;
  unsigned r = 1;
  unsigned initial = 0;
  std::string reduce = "on";
  bool models = false;
};

int do_translate(const TranslateArgs& a, std::ostream& out) {
  ProblemSpec p = load_problem_arg(a.problem);
  QueryOptions q;
  q.strategy = a.strategy.empty() ? p.strategy : strategy_arg(a.strategy);
  q.reduce_radicals = a.reduce == "on";
  q.produce_models = a.models;
  Formula f;
  if (a.initial > 0) {
    f = build_initial_check(p, a.initial);
    q.comments = {"problem: " + p.name, "query: initial condition k=" + std::to_string(a.initial)};
  } else {
    f = build_refutation(p, a.r);
    q.comments = {"problem: " + p.name, "query: refutation r=" + std::to_string(a.r)};
  }
  std::string script = compile_query(f, q);
  if (a.output.empty() || a.output == "-") {
    out << script;
  } else {
    bench::write_text_file(a.output, script);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string problems;
  SolverFlags solvers;
  std::vector<std::string> only;
  std::vector<std::string> strategies{"guard", "bdc", "ddc"};
  double timeout = 1200.0;
  unsigned jobs = 1;
  unsigned r = 1;
  std::string reduce = "on";
  std::string output = "bench-out";
};

std::vector<ProblemSpec> load_problem_dir(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error("problem directory '" + dir + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error("no .json problem files in '" + dir + "'");
  std::vector<ProblemSpec> problems;
  for (const auto& f : files) problems.push_back(load_problem(f));
  return problems;
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  auto problems = a.problems.empty() ? example_problems() : load_problem_dir(a.problems);
  auto all = a.solvers.load();
  std::vector<smtlib::SolverConfig> solvers;
  if (a.only.empty()) {
    solvers = all;
  } else {
    for (const auto& n : a.only) solvers.push_back(find_solver(all, n));
  }
  std::vector<Strategy> strategies;
  for (const auto& s : a.strategies) strategies.push_back(strategy_arg(s));
  bench::BenchOptions opts;
  opts.r = a.r;
  opts.reduce_radicals = a.reduce == "on";

  auto records = bench::run_benchmark(problems, solvers, strategies, a.timeout, a.jobs, opts);
  fs::create_directories(a.output);
  const fs::path dir(a.output);
  bench::write_records_csv(records, dir / "results.csv");
  bench::write_text_file(dir / "matrix.csv", bench::status_matrix_csv(records));
  std::vector<bench::SurvivalSeries> series;
  for (const auto& s : solvers) series.push_back(bench::survival_series(records, s.name));
  bench::write_text_file(dir / "survival.svg", bench::survival_svg(series));

  out << records.size() << " runs written to " << (dir / "results.csv").string() << "\n";
  for (const auto& s : solvers) {
    std::size_t counts[5] = {};
    double total = 0;
    for (const auto& r : records)
      if (r.solver == s.name) counts[static_cast<int>(r.status)]++;
    auto sv = bench::survival_series(records, s.name);
    if (!sv.points.empty()) total = sv.points.back().second;
    out << "  " << s.name << ": " << counts[0] << " sat, " << counts[1] << " unsat, " << counts[2] << " unknown, "
        << counts[3] << " timeout, " << counts[4] << " error; " << seconds(total) << " answered\n";
  }
  auto clashes = bench::soundness_disagreements(records);
  for (const auto& c : clashes) err << "soundness disagreement: " << c << "\n";
  return clashes.empty() ? kExitOk : kExitDisagreement;
}

struct PlotArgs {
  std::string input;
  std::string kind = "survival";
  std::string a, b;
  std::string output;
  double timeout = 1200.0;
};

int do_plot(const PlotArgs& a, std::ostream& out, std::ostream& err) {
  auto records = bench::read_records_csv(a.input);
  std::string svg;
  int code = kExitOk;
  if (a.kind == "survival") {
    std::vector<std::string> names;
    if (!a.a.empty()) names.push_back(a.a);
    if (!a.b.empty()) names.push_back(a.b);
    if (names.empty()) names = bench::solver_names(records);
    std::vector<bench::SurvivalSeries> series;
    for (const auto& n : names) series.push_back(bench::survival_series(records, n));
    svg = bench::survival_svg(series);
  } else {
    if (a.a.empty() || a.b.empty()) throw Error("scatter plots need --a and --b");
    auto points = bench::scatter_series(records, a.a, a.b, a.timeout);
    for (const auto& p : points)
      if (p.label == bench::ScatterLabel::Disagreement) {
        err << "soundness disagreement: " << p.problem << "\n";
        code = kExitDisagreement;
      }
    svg = bench::scatter_svg(points, a.a, a.b, a.timeout);
  }
  std::string output = a.output;
  if (output.empty()) output = (fs::path(a.input).parent_path() / (a.kind + ".svg")).string();
  bench::write_text_file(output, svg);
  out << "wrote " << output << "\n";
  return code;
}

struct ExamplesArgs {
  std::string output = "problems";
  bool scripts = false;
  unsigned r = 1;
};

int do_examples(const ExamplesArgs& a, std::ostream& out) {
  fs::create_directories(a.output);
  const fs::path dir(a.output);
  std::size_t written = 0;
  for (const auto& p : example_problems()) {
    bench::write_text_file(dir / (p.name + ".json"), problem_to_json(p));
    ++written;
    if (!a.scripts) continue;
    for (Strategy s : kAllStrategies) {
      QueryOptions q;
      q.strategy = s;
      q.comments = {"problem: " + p.name, "query: refutation r=" + std::to_string(a.r)};
      bench::write_text_file(dir / (p.name + "." + std::string(strategy_name(s)) + ".smt2"),
                             compile_query(build_refutation(p, a.r), q));
      ++written;
    }
  }
  out << "wrote " << written << " files to " << dir.string() << "\n";
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Induction prover for sequence inequalities over external QF_NRA solvers", "nraprove"};
  app.require_subcommand(1);

  ProveArgs pa;
  auto* prove_cmd = app.add_subcommand("prove", "Attempt an induction proof, increasing r up to --max-r");
  prove_cmd->add_option("problem", pa.problem, "Problem JSON file or built-in example name")->required();
  prove_cmd->add_option("--solver", pa.solver, "Solver name from the solver config")->capture_default_str();
  add_solver_file_flag(prove_cmd, pa.solvers);
  prove_cmd->add_option("--max-r", pa.max_r, "Largest induction depth r to try")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  prove_cmd->add_option("--timeout", pa.timeout, "Wall-clock limit per solver call, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  prove_cmd->add_option("--strategy", pa.strategy, "Denominator handling; defaults to the problem's own")
      ->check(kStrategyCheck);
  prove_cmd->add_option("--reduce-radicals", pa.reduce, "Reduce y_d modulo y_d^2 - d")
      ->check(kOnOffCheck)
      ->capture_default_str();
  prove_cmd->add_flag("--abort-on-timeout", pa.abort_on_timeout,
                      "Stop at the first refutation timeout instead of trying the next r");

  TranslateArgs ta;
  auto* tr_cmd = app.add_subcommand("translate", "Write the SMT-LIB script of one query");
  tr_cmd->add_option("problem", ta.problem, "Problem JSON file or built-in example name")->required();
  tr_cmd->add_option("-o,--output", ta.output, "Output .smt2 file (stdout if omitted)");
  tr_cmd->add_option("--strategy", ta.strategy, "Denominator handling; defaults to the problem's own")
      ->check(kStrategyCheck);
  auto* r_opt = tr_cmd->add_option("--r", ta.r, "Depth of the refutation script")
                    ->check(CLI::PositiveNumber)
                    ->capture_default_str();
  tr_cmd->add_option("--initial", ta.initial, "Emit the initial-condition check at index K instead")
      ->check(CLI::PositiveNumber)
      ->excludes(r_opt);
  tr_cmd->add_option("--reduce-radicals", ta.reduce, "Reduce y_d modulo y_d^2 - d")
      ->check(kOnOffCheck)
      ->capture_default_str();
  tr_cmd->add_flag("--models", ta.models, "Request a model (produce-models, get-model)");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Run refutation scripts of many problems on several solvers");
  bench_cmd->add_option("--problems", ba.problems, "Directory of problem JSON files (built-in examples if omitted)");
  add_solver_file_flag(bench_cmd, ba.solvers);
  bench_cmd->add_option("--solver", ba.only, "Restrict to these configured solvers (repeatable)");
  bench_cmd->add_option("--strategies", ba.strategies, "Comma-separated strategies")
      ->delimiter(',')
      ->check(kStrategyCheck)
      ->capture_default_str();
  bench_cmd->add_option("--timeout", ba.timeout, "Wall-clock limit per run, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--jobs", ba.jobs, "Concurrent solver processes; above 1 distorts timings")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--r", ba.r, "Depth of the refutation scripts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--reduce-radicals", ba.reduce, "Reduce y_d modulo y_d^2 - d")
      ->check(kOnOffCheck)
      ->capture_default_str();
  bench_cmd->add_option("-o,--output", ba.output, "Output directory for results.csv, matrix.csv, survival.svg")
      ->capture_default_str();

  PlotArgs pl;
  auto* plot_cmd = app.add_subcommand("plot", "Render an SVG plot from results.csv");
  plot_cmd->add_option("results", pl.input, "results.csv written by bench")->required()->check(CLI::ExistingFile);
  plot_cmd->add_option("--kind", pl.kind, "survival or scatter")
      ->check(CLI::IsMember({"survival", "scatter"}))
      ->capture_default_str();
  plot_cmd->add_option("--a", pl.a, "First solver (x axis of a scatter plot)");
  plot_cmd->add_option("--b", pl.b, "Second solver (y axis of a scatter plot)");
  plot_cmd->add_option("--timeout", pl.timeout, "Position of timed-out runs in a scatter plot, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  plot_cmd->add_option("-o,--output", pl.output, "Output .svg file (next to the CSV if omitted)");

  ExamplesArgs ea;
  auto* ex_cmd = app.add_subcommand("examples", "Write the built-in example problems as JSON files");
  ex_cmd->add_option("-o,--output", ea.output, "Output directory")->capture_default_str();
  ex_cmd->add_flag("--scripts", ea.scripts, "Also write refutation scripts in all three strategies");
  ex_cmd->add_option("--r", ea.r, "Depth of the refutation scripts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (prove_cmd->parsed()) return do_prove(pa, out);
    if (tr_cmd->parsed()) return do_translate(ta, out);
    if (bench_cmd->parsed()) return do_bench(ba, out, err);
    if (plot_cmd->parsed()) return do_plot(pl, out, err);
    if (ex_cmd->parsed()) return do_examples(ea, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace nraprove
