#ifndef NRAPROVE_FORMULA_SYMBOLS_HPP
#define NRAPROVE_FORMULA_SYMBOLS_HPP

#include "nraprove/algebra/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace nraprove {

// Reserved variable names.
//   x        the current free term of the sequence
//   x_s<i>   its i-th shift; s(x) in concrete syntax is x_s1
//   x_<i>    the free term at the i-th instance of an unrolled problem
//   sqrt(d)  an unencoded square root of the integer d
//   y_<d>    the real variable standing for sqrt(d) after encoding

inline constexpr std::string_view kFreeTerm = "x";

// shift_var(0) is "x", shift_var(i) is "x_s<i>".
std::string shift_var(unsigned level);
// Level of a free-term shift variable ("x" -> 0, "x_s3" -> 3).
std::optional<unsigned> shift_level(std::string_view name);

std::string index_var(unsigned i);

std::string radical_symbol(const Integer& radicand);
std::optional<Integer> radical_radicand(std::string_view name);
std::string encoded_radical_var(const Integer& radicand);
std::optional<Integer> encoded_radicand(std::string_view name);

// True for symbols that the shift operator leaves fixed.
bool is_shift_constant(std::string_view name);

// Names a user may declare: an identifier that does not collide with the
// reserved families above.
bool is_user_identifier(std::string_view name);

} // namespace nraprove

#endif
