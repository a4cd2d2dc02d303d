#ifndef NRAPROVE_INDUCTION_PROBLEM_HPP
#define NRAPROVE_INDUCTION_PROBLEM_HPP

#include "nraprove/formula/shift.hpp"
#include "nraprove/preprocess/preprocess.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nraprove {

// A sequence simulated by a variable: its value at the base index (over the
// free term x, read as x_1) and its value one index later.
struct SequenceVarDecl {
  std::string name;
  std::string init_text;
  std::string shift_text;
  RationalFunction init;
  RationalFunction shift;
};

// Claim and assumptions hold at every index n >= t. Both may use the sequence
// variables, x and radicals sqrt(d); s(x) is only meaningful in shift rules.
struct ProblemSpec {
  std::string name;
  unsigned t = 1;
  std::vector<SequenceVarDecl> sequence_vars;
  std::vector<std::string> assumption_texts;
  std::string claim_text;
  Formula assumptions;
  Formula claim;
  Strategy strategy = Strategy::Guard;

  ShiftRules shift_rules() const;
};

struct SequenceVarText {
  std::string name;
  std::string init;
  std::string shift;
};

// Parses and validates. Throws ProblemError (or ParseError with context).
ProblemSpec make_problem(std::string name, unsigned t, const std::vector<SequenceVarText>& vars,
                         const std::vector<std::string>& assumptions, const std::string& claim,
                         Strategy strategy = Strategy::Guard);

// Problem file (JSON):
// { "name": str, "t": int,
//   "sequence_vars": [{"name": str, "init": expr, "shift": expr}],
//   "assumptions": [relation], "claim": relation,
//   "strategy": "guard" | "bdc" | "ddc" }
ProblemSpec parse_problem(std::string_view json_text);
ProblemSpec load_problem(const std::filesystem::path& path);
std::string problem_to_json(const ProblemSpec& p);

} // namespace nraprove

#endif
