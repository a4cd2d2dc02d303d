#ifndef NRAPROVE_PREPROCESS_PREPROCESS_HPP
#define NRAPROVE_PREPROCESS_PREPROCESS_HPP

#include "nraprove/formula/formula.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace nraprove {

// How rational atoms f/g op 0 are turned into polynomial constraints.
//   Guard: keep f/g op 0 and add g != 0.
//   Bdc:   f*g op 0 and g != 0.
//   Ddc:   (g > 0 and f op 0) or (g < 0 and 0 op f).
// Equalities and disequalities always become f op 0 and g != 0.
enum class Strategy { Guard, Bdc, Ddc };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);
inline constexpr Strategy kAllStrategies[] = {Strategy::Guard, Strategy::Bdc, Strategy::Ddc};

// f/g op 0 with gcd(f, g) = 1 and g != 0. g is exactly 1 for polynomial atoms.
struct ClearedAtom {
  Polynomial f;
  Polynomial g;
  RelOp op;
};

// (lhs - rhs) op 0 brought over a common, reduced denominator.
ClearedAtom normalize_atom(const RationalFunction& lhs, RelOp op, const RationalFunction& rhs);
ClearedAtom normalize_atom(const Atom& atom);

Formula clear_bdc(const ClearedAtom& a);
Formula clear_ddc(const ClearedAtom& a);
Formula clear_equality(const ClearedAtom& a);
Formula clear_guard(const ClearedAtom& a);

// Rewrites each rational atom in place (after conversion to negation normal
// form); polynomial atoms are untouched. No disjunctive normal form is built.
Formula apply_strategy(const Formula& f, Strategy s);

struct AlgebraicEncoding {
  Formula formula;          // radicals replaced by y_d
  Formula side_conditions;  // y_d^2 = d and y_d > 0 for each radicand d
  std::vector<Integer> radicands;

  Formula combined() const { return Formula::conj({formula, side_conditions}); }
};

// Replaces every sqrt(d) by a fresh variable y_d. With `reduce`, every atom is
// also rewritten modulo y_d^2 - d so that y_d occurs at most linearly.
// Throws NegativeRadicand for d <= 0.
AlgebraicEncoding encode_algebraic(const Formula& f, bool reduce = true);

// Reduces every atom modulo y_d^2 - d for the given radicands.
Formula reduce_radicals(const Formula& f, const std::vector<Integer>& radicands);

} // namespace nraprove

#endif
