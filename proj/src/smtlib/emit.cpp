#include "nraprove/smtlib/emit.hpp"

#include "nraprove/errors.hpp"
#include "nraprove/formula/symbols.hpp"

#include <sstream>

namespace nraprove::smtlib {

namespace {

std::string emit_nonnegative(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(/ " + q.get_num().get_str() + " " + q.get_den().get_str() + ")";
}

const std::string& checked_symbol(const std::string& v) {
  if (radical_radicand(v)) throw UnsupportedConstruct("radical " + v + " must be encoded before emission");
  return v;
}

// Magnitude |c| * m as a product.
std::string emit_term_magnitude(const Rational& mag, const Monomial& m) {
  std::vector<std::string> factors;
  if (mag != 1 || m.is_one()) factors.push_back(emit_nonnegative(mag));
  for (const auto& [v, e] : m.factors())
    for (unsigned i = 0; i < e; ++i) factors.push_back(checked_symbol(v));
  if (factors.size() == 1) return factors.front();
  std::string out = "(*";
  for (const auto& f : factors) out += " " + f;
  return out + ")";
}

std::string nary(const char* op, const std::vector<std::string>& args) {
  if (args.size() == 1) return args.front();
  std::string out = std::string("(") + op;
  for (const auto& a : args) out += " " + a;
  return out + ")";
}

std::string relation(RelOp op, const std::string& term) {
  if (op == RelOp::Ne) return "(not (= " + term + " 0))";
  return "(" + std::string(symbol(op)) + " " + term + " 0)";
}

} // namespace

std::string emit_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::string> pos, neg;
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c) > 0)
      pos.push_back(emit_term_magnitude(c, m));
    else
      neg.push_back(emit_term_magnitude(-c, m));
  }
  if (neg.empty()) return nary("+", pos);
  if (pos.empty()) return "(- " + nary("+", neg) + ")";
  std::string out = "(- " + nary("+", pos);
  for (const auto& n : neg) out += " " + n;
  return out + ")";
}

std::string emit_term(const RationalFunction& f, bool allow_division) {
  if (f.is_polynomial()) return emit_polynomial(f.num());
  if (!allow_division)
    throw UnsupportedConstruct("division in " + f.to_string() + " requires the guard strategy");
  return "(/ " + emit_polynomial(f.num()) + " " + emit_polynomial(f.den()) + ")";
}

std::string emit_formula(const Formula& f, bool allow_division) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::True: return "true";
  case K::False: return "false";
  case K::Atom: return relation(f.atom().op, emit_term(f.atom().lhs, allow_division));
  case K::Not: return "(not " + emit_formula(f.children().front(), allow_division) + ")";
  case K::And:
  case K::Or: {
    std::string out = f.kind() == K::And ? "(and" : "(or";
    for (const auto& c : f.children()) out += " " + emit_formula(c, allow_division);
    return out + ")";
  }
  }
  return {};
}

std::string emit_script(const Formula& f, const EmitOptions& opts) {
  std::ostringstream os;
  for (const auto& c : opts.comments) os << "; " << c << "\n";
  if (opts.produce_models) os << "(set-option :produce-models true)\n";
  os << "(set-logic " << opts.logic << ")\n";
  for (const auto& v : f.variables()) os << "(declare-const " << checked_symbol(v) << " Real)\n";
  for (const auto& c : f.conjuncts()) os << "(assert " << emit_formula(c, opts.allow_division) << ")\n";
  os << "(check-sat)\n";
  if (opts.produce_models) os << "(get-model)\n";
  return os.str();
}

} // namespace nraprove::smtlib
