#ifndef NRAPROVE_FORMULA_PARSER_HPP
#define NRAPROVE_FORMULA_PARSER_HPP

#include "nraprove/formula/formula.hpp"

#include <string_view>

namespace nraprove {

// Infix arithmetic: + - * / ^, integer literals, identifiers, s(x) and
// sqrt(d). '^' takes a non-negative integer exponent and binds tighter than
// unary minus, so -x^2 is -(x^2). Throws ParseError.
RationalFunction parse_expression(std::string_view text);

// "lhs op rhs" with op one of > < >= <= = !=.
Formula parse_relation(std::string_view text);

} // namespace nraprove

#endif
