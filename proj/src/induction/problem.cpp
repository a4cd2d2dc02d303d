#include "nraprove/induction/problem.hpp"

#include "nraprove/errors.hpp"
#include "nraprove/formula/parser.hpp"
#include "nraprove/formula/symbols.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace nraprove {

ShiftRules ProblemSpec::shift_rules() const {
  ShiftRules rules;
  for (const auto& v : sequence_vars) rules.emplace(v.name, v.shift);
  return rules;
}

namespace {

template <class Parse>
auto parse_in_context(const std::string& what, const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ProblemError(what + " \"" + text + "\": " + e.what());
  } catch (const Error& e) {
    throw ProblemError(what + " \"" + text + "\": " + e.what());
  }
}

void check_symbols(const std::string& what, const std::string& text, const std::vector<std::string>& vars,
                   const std::set<std::string, std::less<>>& allowed) {
  for (const auto& v : vars) {
    if (allowed.count(v) || radical_radicand(v)) continue;
    if (v == shift_var(1))
      throw ProblemError(what + " \"" + text + "\" uses s(x), which is only allowed in shift rules");
    throw ProblemError(what + " \"" + text + "\" uses undeclared symbol '" + v + "'");
  }
}

} // namespace

ProblemSpec make_problem(std::string name, unsigned t, const std::vector<SequenceVarText>& vars,
                         const std::vector<std::string>& assumptions, const std::string& claim,
                         Strategy strategy) {
  ProblemSpec p;
  p.name = std::move(name);
  if (p.name.empty()) throw ProblemError("problem name must not be empty");
  if (t < 1) throw ProblemError("base index t must be at least 1");
  p.t = t;
  p.strategy = strategy;

  std::set<std::string, std::less<>> seq_names;
  for (const auto& v : vars) {
    if (!is_user_identifier(v.name))
      throw ProblemError("'" + v.name + "' is not a valid sequence variable name (reserved or malformed)");
    if (!seq_names.insert(v.name).second) throw ProblemError("duplicate sequence variable '" + v.name + "'");
  }

  const std::string free_term(kFreeTerm);
  std::set<std::string, std::less<>> init_allowed{free_term};
  std::set<std::string, std::less<>> shift_allowed = seq_names;
  shift_allowed.insert(free_term);
  shift_allowed.insert(shift_var(1));
  std::set<std::string, std::less<>> formula_allowed = seq_names;
  formula_allowed.insert(free_term);

  for (const auto& v : vars) {
    SequenceVarDecl d;
    d.name = v.name;
    d.init_text = v.init;
    d.shift_text = v.shift;
    d.init = parse_in_context("init of " + v.name, v.init, parse_expression);
    d.shift = parse_in_context("shift of " + v.name, v.shift, parse_expression);
    check_symbols("init of " + v.name, v.init, d.init.variables(), init_allowed);
    check_symbols("shift of " + v.name, v.shift, d.shift.variables(), shift_allowed);
    p.sequence_vars.push_back(std::move(d));
  }

  std::vector<Formula> parts;
  for (const auto& a : assumptions) {
    Formula f = parse_in_context("assumption", a, parse_relation);
    check_symbols("assumption", a, f.variables(), formula_allowed);
    parts.push_back(std::move(f));
  }
  p.assumption_texts = assumptions;
  p.assumptions = Formula::conj(std::move(parts));
  p.claim_text = claim;
  p.claim = parse_in_context("claim", claim, parse_relation);
  check_symbols("claim", claim, p.claim.variables(), formula_allowed);
  return p;
}

ProblemSpec parse_problem(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ProblemError(std::string("problem file is not valid JSON: ") + e.what());
  }
  try {
    std::vector<SequenceVarText> vars;
    for (const auto& v : j.at("sequence_vars"))
      vars.push_back({v.at("name").get<std::string>(), v.at("init").get<std::string>(),
                      v.at("shift").get<std::string>()});
    std::vector<std::string> assumptions;
    if (j.contains("assumptions")) assumptions = j.at("assumptions").get<std::vector<std::string>>();
    std::string strategy_text = j.value("strategy", "guard");
    auto strategy = parse_strategy(strategy_text);
    if (!strategy) throw ProblemError("unknown strategy '" + strategy_text + "'");
    int t = j.value("t", 1);
    if (t < 1) throw ProblemError("base index t must be at least 1");
    return make_problem(j.at("name").get<std::string>(), static_cast<unsigned>(t), vars, assumptions,
                        j.at("claim").get<std::string>(), *strategy);
  } catch (const nlohmann::json::exception& e) {
    throw ProblemError(std::string("malformed problem file: ") + e.what());
  }
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot read problem file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem(ss.str());
  } catch (const ProblemError& e) {
    throw ProblemError(path.string() + ": " + e.what());
  }
}

std::string problem_to_json(const ProblemSpec& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  j["t"] = p.t;
  j["sequence_vars"] = nlohmann::ordered_json::array();
  for (const auto& v : p.sequence_vars)
    j["sequence_vars"].push_back({{"name", v.name}, {"init", v.init_text}, {"shift", v.shift_text}});
  j["assumptions"] = p.assumption_texts;
  j["claim"] = p.claim_text;
  j["strategy"] = std::string(strategy_name(p.strategy));
  return j.dump(2) + "\n";
}

} // namespace nraprove
