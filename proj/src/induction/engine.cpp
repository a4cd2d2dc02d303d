#include "nraprove/induction/engine.hpp"

#include "nraprove/errors.hpp"
#include "nraprove/formula/symbols.hpp"
#include "nraprove/smtlib/emit.hpp"

#include <set>
#include <sstream>

namespace nraprove {

namespace {

using Values = std::map<std::string, RationalFunction>;

// Values at indices t..k, front() being index t.
std::vector<Values> unroll_window(const ProblemSpec& p, unsigned k) {
  if (k < p.t)
    throw ProblemError("instance " + std::to_string(k) + " precedes the base index " + std::to_string(p.t));
  const Substitution first{{std::string(kFreeTerm), RationalFunction(Polynomial::variable(index_var(1)))}};
  std::vector<Values> window;
  Values current;
  for (const auto& v : p.sequence_vars) current.emplace(v.name, substitute(v.init, first));
  window.push_back(current);
  for (unsigned i = p.t; i < k; ++i) {
    unsigned pos = i - p.t + 1;  // free term x at index i is x_pos
    Substitution step;
    for (const auto& [name, value] : current) step.emplace(name, value);
    step.emplace(std::string(kFreeTerm), RationalFunction(Polynomial::variable(index_var(pos))));
    step.emplace(shift_var(1), RationalFunction(Polynomial::variable(index_var(pos + 1))));
    Values next;
    for (const auto& v : p.sequence_vars) next.emplace(v.name, substitute(v.shift, step));
    window.push_back(next);
    current = std::move(next);
  }
  return window;
}

Substitution instance_bindings(const ProblemSpec& p, const Values& values, unsigned index) {
  Substitution b;
  for (const auto& [name, value] : values) b.emplace(name, value);
  b.emplace(std::string(kFreeTerm), RationalFunction(Polynomial::variable(index_var(index - p.t + 1))));
  return b;
}

smtlib::SolverResult run_with(const QueryRunner& run, const std::string& script) {
  try {
    return run(script);
  } catch (const std::exception& e) {
    smtlib::SolverResult r;
    r.status = smtlib::SolverStatus::Error;
    r.detail = e.what();
    return r;
  }
}

} // namespace

std::map<std::string, RationalFunction> unroll_initial(const ProblemSpec& p, unsigned k) {
  return unroll_window(p, k).back();
}

Formula build_initial_check(const ProblemSpec& p, unsigned k) {
  auto window = unroll_window(p, k);
  std::vector<Formula> parts;
  for (unsigned i = p.t; i <= k; ++i)
    parts.push_back(substitute(p.assumptions, instance_bindings(p, window[i - p.t], i)));
  parts.push_back(negate(substitute(p.claim, instance_bindings(p, window.back(), k))));
  return Formula::conj(std::move(parts));
}

Formula build_refutation(const ProblemSpec& p, unsigned r) {
  if (r < 1) throw ProblemError("refutation depth must be at least 1");
  const ShiftRules rules = p.shift_rules();
  std::vector<Formula> parts;
  for (unsigned i = 0; i <= r; ++i) parts.push_back(shift(p.assumptions, rules, i));
  for (unsigned i = 0; i < r; ++i) parts.push_back(shift(p.claim, rules, i));
  parts.push_back(negate(shift(p.claim, rules, r)));
  return Formula::conj(std::move(parts));
}

Formula prepare_query(const Formula& f, Strategy strategy, bool reduce_radicals) {
  AlgebraicEncoding enc = encode_algebraic(f, reduce_radicals);
  Formula body = apply_strategy(enc.formula, strategy);
  // Clearing denominators can raise the degree in y_d again.
  if (reduce_radicals) body = nraprove::reduce_radicals(body, enc.radicands);
  return Formula::conj({body, enc.side_conditions});
}

std::string compile_query(const Formula& f, const QueryOptions& opts) {
  smtlib::EmitOptions emit;
  emit.produce_models = opts.produce_models;
  emit.comments = opts.comments;
  emit.comments.push_back("strategy: " + std::string(strategy_name(opts.strategy)));
  emit.allow_division = opts.strategy == Strategy::Guard;
  return smtlib::emit_script(prepare_query(f, opts.strategy, opts.reduce_radicals), emit);
}

std::string ProofOutcome::summary() const {
  std::ostringstream os;
  if (auto* p = std::get_if<outcome::Proved>(&result)) {
    os << "Proved at t=" << p->t << ", r=" << p->r;
  } else if (auto* f = std::get_if<outcome::FailedInitial>(&result)) {
    os << "Initial condition fails at k=" << f->k;
    if (f->witness && !f->witness->empty()) {
      os << " (witness:";
      for (const auto& [v, val] : *f->witness) os << " " << v << "=" << val;
      os << ")";
    }
  } else if (auto* u = std::get_if<outcome::Unknown>(&result)) {
    os << "Unknown after r=" << u->r_reached;
  } else if (auto* e = std::get_if<outcome::SolverError>(&result)) {
    os << "Solver error: " << e->detail;
  }
  return os.str();
}

ProofOutcome prove(const ProblemSpec& p, const InductionConfig& cfg) {
  return prove(p, cfg, [&cfg](const std::string& script) {
    return smtlib::run_solver(script, cfg.solver, cfg.timeout_s);
  });
}

ProofOutcome prove(const ProblemSpec& p, const InductionConfig& cfg, const QueryRunner& run) {
  using smtlib::SolverStatus;
  if (cfg.max_r < 1) throw ProblemError("max_r must be at least 1");
  const Strategy strategy = cfg.strategy.value_or(p.strategy);
  ProofOutcome out;
  std::set<unsigned> initial_ok;
  std::optional<smtlib::Model> last_witness;

  auto query = [&](QueryKind kind, unsigned index, const Formula& f) -> const smtlib::SolverResult& {
    std::string description = kind == QueryKind::Initial
                                  ? "initial condition k=" + std::to_string(index)
                                  : "refutation r=" + std::to_string(index);
    QueryOptions opts;
    opts.strategy = strategy;
    opts.reduce_radicals = cfg.reduce_radicals;
    opts.produce_models = cfg.solver.models;
    opts.comments = {"problem: " + p.name, "query: " + description};
    std::string script = compile_query(f, opts);
    out.trace.push_back({kind, index, description, run_with(run, script)});
    return out.trace.back().result;
  };
  auto solver_error = [&](const smtlib::SolverResult& r) {
    out.result = outcome::SolverError{r.detail.empty() ? "solver error" : r.detail, r.spawn_failed};
    return out;
  };

  for (unsigned r = 1; r <= cfg.max_r; ++r) {
    for (unsigned k = p.t; k < p.t + r; ++k) {
      if (initial_ok.count(k)) continue;
      const auto& res = query(QueryKind::Initial, k, build_initial_check(p, k));
      switch (res.status) {
      case SolverStatus::Unsat: initial_ok.insert(k); break;
      case SolverStatus::Sat:
        out.result = outcome::FailedInitial{k, res.model};
        return out;
      case SolverStatus::Unknown:
      case SolverStatus::Timeout:
        // Every deeper window contains k as well.
        out.result = outcome::Unknown{r, last_witness};
        return out;
      case SolverStatus::Error: return solver_error(res);
      }
    }
    const auto& res = query(QueryKind::Refutation, r, build_refutation(p, r));
    switch (res.status) {
    case SolverStatus::Unsat:
      out.result = outcome::Proved{p.t, r};
      return out;
    case SolverStatus::Sat: last_witness = res.model; break;
    case SolverStatus::Unknown:
    case SolverStatus::Timeout:
      if (cfg.abort_on_timeout) {
        out.result = outcome::Unknown{r, last_witness};
        return out;
      }
      break;
    case SolverStatus::Error: return solver_error(res);
    }
  }
  out.result = outcome::Unknown{cfg.max_r, last_witness};
  return out;
}

} // namespace nraprove
