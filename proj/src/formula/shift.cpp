#include "nraprove/formula/shift.hpp"

#include "nraprove/errors.hpp"
#include "nraprove/formula/symbols.hpp"

namespace nraprove {

namespace {

Substitution one_step(const std::vector<std::string>& vars, const ShiftRules& rules) {
  Substitution sigma;
  for (const auto& v : vars) {
    if (auto it = rules.find(v); it != rules.end()) {
      sigma.emplace(v, it->second);
    } else if (auto level = shift_level(v)) {
      sigma.emplace(v, RationalFunction(Polynomial::variable(shift_var(*level + 1))));
    } else if (!is_shift_constant(v)) {
      throw MissingShiftRule(v);
    }
  }
  return sigma;
}

} // namespace

RationalFunction shift(const RationalFunction& e, const ShiftRules& rules, unsigned k) {
  RationalFunction out = e;
  for (unsigned i = 0; i < k; ++i) out = substitute(out, one_step(out.variables(), rules));
  return out;
}

Formula shift(const Formula& f, const ShiftRules& rules, unsigned k) {
  Formula out = f;
  for (unsigned i = 0; i < k; ++i) out = substitute(out, one_step(out.variables(), rules));
  return out;
}

} // namespace nraprove
