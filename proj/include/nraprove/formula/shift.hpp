#ifndef NRAPROVE_FORMULA_SHIFT_HPP
#define NRAPROVE_FORMULA_SHIFT_HPP

#include "nraprove/formula/formula.hpp"

#include <map>
#include <string>

namespace nraprove {

// Value of each sequence variable one index later, written over the sequence
// variables, the free term x and its shift s(x) (the variable x_s1).
using ShiftRules = std::map<std::string, RationalFunction, std::less<>>;

// s^k(e). One application maps every sequence variable V to its rule and
// advances the free term x -> x_s1 -> x_s2 -> ..., all simultaneously.
// Radical symbols are constants. Any other variable raises MissingShiftRule.
RationalFunction shift(const RationalFunction& e, const ShiftRules& rules, unsigned k);
Formula shift(const Formula& f, const ShiftRules& rules, unsigned k);

} // namespace nraprove

#endif
