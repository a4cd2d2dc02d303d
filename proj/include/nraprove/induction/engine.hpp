#ifndef NRAPROVE_INDUCTION_ENGINE_HPP
#define NRAPROVE_INDUCTION_ENGINE_HPP

#include "nraprove/induction/problem.hpp"
#include "nraprove/smtlib/solver.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nraprove {

struct InductionConfig {
  unsigned max_r = 5;
  smtlib::SolverConfig solver;
  double timeout_s = 1200.0;
  // On a refutation timeout/unknown: stop (true) or try the next depth.
  bool abort_on_timeout = false;
  bool reduce_radicals = true;
  // Overrides the problem's own strategy when set.
  std::optional<Strategy> strategy;
};

// Values of the sequence variables at instance k >= t, over x_1..x_{k-t+1}.
std::map<std::string, RationalFunction> unroll_initial(const ProblemSpec& p, unsigned k);

// Assumptions instantiated at every index t..k together with the negated
// claim at k. Unsatisfiable exactly when the initial condition at k holds.
Formula build_initial_check(const ProblemSpec& p, unsigned k);

// psi, s(psi), ..., s^r(psi), phi, ..., s^{r-1}(phi) and not s^r(phi).
Formula build_refutation(const ProblemSpec& p, unsigned r);

struct QueryOptions {
  Strategy strategy = Strategy::Guard;
  bool reduce_radicals = true;
  bool produce_models = false;
  std::vector<std::string> comments;
};

// Radical encoding, denominator clearing and serialization of one query.
Formula prepare_query(const Formula& f, Strategy strategy, bool reduce_radicals);
std::string compile_query(const Formula& f, const QueryOptions& opts);

namespace outcome {
struct Proved {
  unsigned t;
  unsigned r;
};
struct FailedInitial {
  unsigned k;
  std::optional<smtlib::Model> witness;
};
struct Unknown {
  unsigned r_reached;
  std::optional<smtlib::Model> witness;
};
struct SolverError {
  std::string detail;
  bool spawn_failed = false;
};
} // namespace outcome

enum class QueryKind { Initial, Refutation };

struct TraceEntry {
  QueryKind kind;
  unsigned index;  // k for initial checks, r for refutations
  std::string description;
  smtlib::SolverResult result;
};

struct ProofOutcome {
  std::variant<outcome::Proved, outcome::FailedInitial, outcome::Unknown, outcome::SolverError> result;
  std::vector<TraceEntry> trace;

  bool proved() const { return std::holds_alternative<outcome::Proved>(result); }
  // "Proved at t=1, r=1" and similar.
  std::string summary() const;
};

// Runs one compiled script. The default runner calls run_solver.
using QueryRunner = std::function<smtlib::SolverResult(const std::string& script)>;

ProofOutcome prove(const ProblemSpec& p, const InductionConfig& cfg);
ProofOutcome prove(const ProblemSpec& p, const InductionConfig& cfg, const QueryRunner& run);

} // namespace nraprove

#endif
