#ifndef NRAPROVE_BENCH_BENCH_HPP
#define NRAPROVE_BENCH_BENCH_HPP

#include "nraprove/induction/problem.hpp"
#include "nraprove/smtlib/solver.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nraprove::bench {

struct BenchRecord {
  std::string problem;
  std::string strategy;
  std::string solver;
  smtlib::SolverStatus status = smtlib::SolverStatus::Error;
  double time_s = 0.0;  // millisecond resolution

  bool operator==(const BenchRecord&) const = default;
};

struct BenchOptions {
  unsigned r = 1;  // depth of the refutation script that is benchmarked
  bool reduce_radicals = true;
};

// One record per problem x strategy x solver, in that nesting order. At most
// `jobs` solver processes run at a time. Failures become Error records.
std::vector<BenchRecord> run_benchmark(const std::vector<ProblemSpec>& problems,
                                       const std::vector<smtlib::SolverConfig>& solvers,
                                       const std::vector<Strategy>& strategies, double timeout_s, unsigned jobs,
                                       const BenchOptions& opts = {});

struct SurvivalSeries {
  std::string solver;
  std::vector<std::pair<std::size_t, double>> points;  // (k, sum of the k smallest times)
};

// Drops Timeout and Error records of `solver`.
SurvivalSeries survival_series(const std::vector<BenchRecord>& records, std::string_view solver);

// Names of all solvers in order of first appearance.
std::vector<std::string> solver_names(const std::vector<BenchRecord>& records);

enum class ScatterLabel { Sat, Unsat, Unresolved, Disagreement };
std::string_view label_name(ScatterLabel l);

struct ScatterPoint {
  std::string problem;  // "name/strategy"
  double time_a = 0.0;
  double time_b = 0.0;
  ScatterLabel label = ScatterLabel::Unresolved;
};

// Pairs the records of two solvers on the same problem and strategy. Timeouts
// are placed at timeout_s. A Sat/Unsat clash is labelled Disagreement.
// Throws MissingSolver when either solver has no records.
std::vector<ScatterPoint> scatter_series(const std::vector<BenchRecord>& records, std::string_view solver_a,
                                         std::string_view solver_b, double timeout_s);

// Problem/strategy pairs on which one solver said sat and another unsat.
std::vector<std::string> soundness_disagreements(const std::vector<BenchRecord>& records);

// header: problem,strategy,solver,status,time_s
std::string records_to_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> records_from_csv(std::string_view text);
void write_records_csv(const std::vector<BenchRecord>& records, const std::filesystem::path& path);
std::vector<BenchRecord> read_records_csv(const std::filesystem::path& path);

// problem,strategy,<solver>... with one status per cell.
std::string status_matrix_csv(const std::vector<BenchRecord>& records);

std::string survival_svg(const std::vector<SurvivalSeries>& series);
std::string scatter_svg(const std::vector<ScatterPoint>& points, std::string_view solver_a,
                        std::string_view solver_b, double timeout_s);

void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace nraprove::bench

#endif
