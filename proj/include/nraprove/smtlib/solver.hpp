#ifndef NRAPROVE_SMTLIB_SOLVER_HPP
#define NRAPROVE_SMTLIB_SOLVER_HPP

#include "nraprove/algebra/polynomial.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nraprove::smtlib {

enum class SolverStatus { Sat, Unsat, Unknown, Timeout, Error };

// "sat", "unsat", "unknown", "timeout", "error".
std::string_view status_name(SolverStatus s);
std::optional<SolverStatus> parse_status_name(std::string_view name);

// An external solver. Each "{file}" argument is replaced by the script path;
// without one, the path is appended.
struct SolverConfig {
  std::string name;
  std::vector<std::string> command;
  bool models = false;
};

using Model = std::map<std::string, std::string>;

struct SolverResult {
  SolverStatus status = SolverStatus::Error;
  double wall_time_s = 0.0;
  std::optional<Model> model;  // only for Sat when models were requested
  std::string output;          // raw stdout
  std::string error_output;    // raw stderr
  std::string detail;          // why the status is Error
  bool spawn_failed = false;
};

// The first line that reads exactly sat, unsat or unknown decides; anything
// else is Error.
SolverStatus parse_status(std::string_view output);

// define-fun entries of a (get-model) response: name -> value text.
Model parse_model(std::string_view output);

// Exact value of a model entry such as 1.0, (- 2), (/ 1.0 3.0). nullopt for
// anything else (e.g. algebraic root objects).
std::optional<Rational> model_value(std::string_view text);

// Writes the script to a unique temporary .smt2 file and runs the solver on
// it. On expiry of the wall-clock limit the whole process group is killed and
// the status is Timeout. Blocking; safe to call from several threads.
SolverResult run_solver(std::string_view script, const SolverConfig& cfg, double timeout_s);

// Solver config file: [{"name": str, "cmd": [str...], "models": bool}].
std::vector<SolverConfig> parse_solver_configs(std::string_view json_text);
std::vector<SolverConfig> load_solver_configs(const std::filesystem::path& path);

// z3, cvc5 and yices-smt2 invoked from PATH.
std::vector<SolverConfig> default_solver_configs();

} // namespace nraprove::smtlib

#endif
