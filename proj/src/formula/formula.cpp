#include "nraprove/formula/formula.hpp"

#include <algorithm>
#include <set>

namespace nraprove {

RelOp complement(RelOp op) {
  switch (op) {
  case RelOp::Gt: return RelOp::Le;
  case RelOp::Lt: return RelOp::Ge;
  case RelOp::Ge: return RelOp::Lt;
  case RelOp::Le: return RelOp::Gt;
  case RelOp::Eq: return RelOp::Ne;
  case RelOp::Ne: return RelOp::Eq;
  }
  return op;
}

RelOp reverse(RelOp op) {
  switch (op) {
  case RelOp::Gt: return RelOp::Lt;
  case RelOp::Lt: return RelOp::Gt;
  case RelOp::Ge: return RelOp::Le;
  case RelOp::Le: return RelOp::Ge;
  default: return op;
  }
}

std::string_view symbol(RelOp op) {
  switch (op) {
  case RelOp::Gt: return ">";
  case RelOp::Lt: return "<";
  case RelOp::Ge: return ">=";
  case RelOp::Le: return "<=";
  case RelOp::Eq: return "=";
  case RelOp::Ne: return "!=";
  }
  return "?";
}

std::optional<RelOp> parse_relop(std::string_view text) {
  for (RelOp op : {RelOp::Gt, RelOp::Lt, RelOp::Ge, RelOp::Le, RelOp::Eq, RelOp::Ne})
    if (symbol(op) == text) return op;
  return std::nullopt;
}

bool holds(RelOp op, int sign) {
  switch (op) {
  case RelOp::Gt: return sign > 0;
  case RelOp::Lt: return sign < 0;
  case RelOp::Ge: return sign >= 0;
  case RelOp::Le: return sign <= 0;
  case RelOp::Eq: return sign == 0;
  case RelOp::Ne: return sign != 0;
  }
  return false;
}

bool is_equality(RelOp op) { return op == RelOp::Eq || op == RelOp::Ne; }

Truth truth_not(Truth t) {
  if (t == Truth::Undefined) return t;
  return t == Truth::True ? Truth::False : Truth::True;
}

struct Formula::Node {
  Kind kind;
  std::optional<Atom> atom;
  std::vector<Formula> children;
};

Formula Formula::truth() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, std::nullopt, {}});
  return Formula(node);
}

Formula Formula::falsity() {
  static const auto node = std::make_shared<const Node>(Node{Kind::False, std::nullopt, {}});
  return Formula(node);
}

Formula Formula::atom(RationalFunction lhs, RelOp op) {
  if (lhs.is_constant()) return holds(op, sgn(lhs.num().constant_term())) ? truth() : falsity();
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, Atom{std::move(lhs), op}, {}}));
}

Formula Formula::relation(const RationalFunction& lhs, RelOp op, const RationalFunction& rhs) {
  return atom(lhs - rhs, op);
}

Formula Formula::nary(Kind kind, std::vector<Formula> children) {
  const Kind absorbing = kind == Kind::And ? Kind::False : Kind::True;
  const Kind neutral = kind == Kind::And ? Kind::True : Kind::False;
  std::vector<Formula> flat;
  for (auto& c : children) {
    Kind k = c.kind();
    if (k == absorbing) return c;
    if (k == neutral) continue;
    if (k == kind) {
      for (const auto& g : c.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return kind == Kind::And ? truth() : falsity();
  if (flat.size() == 1) return flat.front();
  return Formula(std::make_shared<const Node>(Node{kind, std::nullopt, std::move(flat)}));
}

Formula Formula::conj(std::vector<Formula> children) { return nary(Kind::And, std::move(children)); }
Formula Formula::disj(std::vector<Formula> children) { return nary(Kind::Or, std::move(children)); }

Formula Formula::negation(Formula child) {
  if (child.is_true()) return falsity();
  if (child.is_false()) return truth();
  return Formula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, {std::move(child)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Atom& Formula::atom() const { return *node_->atom; }
const std::vector<Formula>& Formula::children() const { return node_->children; }

std::vector<Formula> Formula::conjuncts() const {
  if (kind() == Kind::And) return children();
  if (kind() == Kind::True) return {};
  return {*this};
}

std::vector<std::string> Formula::variables() const {
  std::set<std::string, VarLess> vars;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.kind() == Kind::Atom) {
      for (auto& v : f.atom().lhs.variables()) vars.insert(v);
    }
    for (const auto& c : f.children()) walk(c);
  };
  walk(*this);
  return {vars.begin(), vars.end()};
}

std::size_t Formula::atom_count() const {
  if (kind() == Kind::Atom) return 1;
  std::size_t n = 0;
  for (const auto& c : children()) n += c.atom_count();
  return n;
}

std::string Formula::to_string() const {
  switch (kind()) {
  case Kind::True: return "true";
  case Kind::False: return "false";
  case Kind::Atom: return atom().lhs.to_string() + " " + std::string(symbol(atom().op)) + " 0";
  case Kind::Not: return "not (" + children().front().to_string() + ")";
  case Kind::And:
  case Kind::Or: {
    std::string sep = kind() == Kind::And ? " and " : " or ";
    std::string out;
    for (std::size_t i = 0; i < children().size(); ++i) {
      if (i) out += sep;
      out += "(" + children()[i].to_string() + ")";
    }
    return out;
  }
  }
  return {};
}

int compare(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.kind() == Formula::Kind::Atom) {
    if (a.atom().op != b.atom().op) return a.atom().op < b.atom().op ? -1 : 1;
    return compare(a.atom().lhs, b.atom().lhs);
  }
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i)
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || compare(a, b) == 0;
}

namespace {

Formula nnf(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::True: return negated ? Formula::falsity() : Formula::truth();
  case K::False: return negated ? Formula::truth() : Formula::falsity();
  case K::Atom:
    return negated ? Formula::atom(f.atom().lhs, complement(f.atom().op)) : f;
  case K::Not: return nnf(f.children().front(), !negated);
  case K::And:
  case K::Or: {
    std::vector<Formula> cs;
    cs.reserve(f.children().size());
    for (const auto& c : f.children()) cs.push_back(nnf(c, negated));
    bool as_and = (f.kind() == K::And) != negated;
    return as_and ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
  }
  }
  return f;
}

} // namespace

Formula negate(const Formula& f) { return nnf(f, true); }
Formula to_nnf(const Formula& f) { return nnf(f, false); }

Formula map_atoms(const Formula& f, const std::function<Formula(const Atom&)>& fn) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::True:
  case K::False: return f;
  case K::Atom: return fn(f.atom());
  case K::Not: return Formula::negation(map_atoms(f.children().front(), fn));
  case K::And:
  case K::Or: {
    std::vector<Formula> cs;
    cs.reserve(f.children().size());
    for (const auto& c : f.children()) cs.push_back(map_atoms(c, fn));
    return f.kind() == K::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
  }
  }
  return f;
}

Formula substitute(const Formula& f, const Substitution& bindings) {
  if (bindings.empty()) return f;
  return map_atoms(f, [&](const Atom& a) { return Formula::atom(substitute(a.lhs, bindings), a.op); });
}

Truth eval_formula(const Formula& f, const Assignment& point) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::True: return Truth::True;
  case K::False: return Truth::False;
  case K::Atom: {
    auto v = f.atom().lhs.eval(point);
    if (!v) return Truth::Undefined;
    return holds(f.atom().op, sgn(*v)) ? Truth::True : Truth::False;
  }
  case K::Not: return truth_not(eval_formula(f.children().front(), point));
  case K::And:
  case K::Or: {
    // Every child is evaluated so that unbound variables always surface.
    bool undefined = false;
    bool decided = false;
    const Truth decisive = f.kind() == K::And ? Truth::False : Truth::True;
    for (const auto& c : f.children()) {
      Truth t = eval_formula(c, point);
      if (t == Truth::Undefined) undefined = true;
      if (t == decisive) decided = true;
    }
    if (undefined) return Truth::Undefined;
    if (decided) return decisive;
    return truth_not(decisive);
  }
  }
  return Truth::Undefined;
}

} // namespace nraprove
