#ifndef NRAPROVE_SMTLIB_EMIT_HPP
#define NRAPROVE_SMTLIB_EMIT_HPP

#include "nraprove/formula/formula.hpp"

#include <string>
#include <vector>

namespace nraprove::smtlib {

struct EmitOptions {
  std::string logic = "QF_NRA";
  bool produce_models = false;
  // Emitted as "; " comment lines at the top of the script.
  std::vector<std::string> comments;
  // Division is only legal when every denominator carries its own != 0 guard.
  bool allow_division = false;
};

// Powers are expanded into products, rationals become (/ n d) and negated
// terms (- t). Throws UnsupportedConstruct for unencoded radicals and for
// division when it is not allowed.
std::string emit_polynomial(const Polynomial& p);
std::string emit_term(const RationalFunction& f, bool allow_division);
std::string emit_formula(const Formula& f, bool allow_division);

// One declare-const per variable in canonical order and one assert per
// top-level conjunct.
std::string emit_script(const Formula& f, const EmitOptions& opts = {});

} // namespace nraprove::smtlib

#endif
