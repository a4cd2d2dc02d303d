#ifndef NRAPROVE_FORMULA_FORMULA_HPP
#define NRAPROVE_FORMULA_FORMULA_HPP

#include "nraprove/algebra/rational_function.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nraprove {

enum class RelOp { Gt, Lt, Ge, Le, Eq, Ne };

// Logical complement: not (a op 0) <=> a complement(op) 0.
RelOp complement(RelOp op);
// Argument swap: (a op b) <=> (b reverse(op) a).
RelOp reverse(RelOp op);
// ">", "<", ">=", "<=", "=", "!=".
std::string_view symbol(RelOp op);
std::optional<RelOp> parse_relop(std::string_view text);
// Whether (value op 0) holds for a value of the given sign.
bool holds(RelOp op, int sign);
bool is_equality(RelOp op);

// lhs op 0, with lhs in canonical rational-function form.
struct Atom {
  RationalFunction lhs;
  RelOp op;

  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class Truth { False, True, Undefined };
Truth truth_not(Truth t);

// Immutable boolean formula over atoms. And/Or nodes are flattened, have at
// least two children, and keep their children in construction order.
class Formula {
public:
  enum class Kind { True, False, Atom, And, Or, Not };

  static Formula truth();
  static Formula falsity();
  // Atoms with a constant left-hand side fold to True or False.
  static Formula atom(RationalFunction lhs, RelOp op);
  // lhs op rhs, stored as (lhs - rhs) op 0.
  static Formula relation(const RationalFunction& lhs, RelOp op, const RationalFunction& rhs);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  // Plain Not node; negate() produces negation normal form instead.
  static Formula negation(Formula child);

  Formula() : Formula(truth()) {}

  Kind kind() const;
  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }
  // Precondition: kind() == Atom.
  const Atom& atom() const;
  const std::vector<Formula>& children() const;
  // Children of a top-level And, otherwise the formula itself. True has none.
  std::vector<Formula> conjuncts() const;

  std::vector<std::string> variables() const;
  std::size_t atom_count() const;
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula nary(Kind kind, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

int compare(const Formula& a, const Formula& b);

// Complement in negation normal form.
Formula negate(const Formula& f);
Formula to_nnf(const Formula& f);

// Rebuilds the formula with every atom replaced by fn(atom).
Formula map_atoms(const Formula& f, const std::function<Formula(const Atom&)>& fn);

// Simultaneous substitution into every atom. Throws ZeroDenominator when a
// denominator becomes the zero polynomial.
Formula substitute(const Formula& f, const Substitution& bindings);

// Three-valued evaluation. A pole in any atom makes that atom Undefined, and
// connectives propagate Undefined. Throws UnboundVariable.
Truth eval_formula(const Formula& f, const Assignment& point);

} // namespace nraprove

#endif
