#include "nraprove/preprocess/preprocess.hpp"

#include "nraprove/errors.hpp"
#include "nraprove/formula/symbols.hpp"

namespace nraprove {

std::string_view strategy_name(Strategy s) {
  switch (s) {
  case Strategy::Guard: return "guard";
  case Strategy::Bdc: return "bdc";
  case Strategy::Ddc: return "ddc";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies)
    if (strategy_name(s) == name) return s;
  return std::nullopt;
}

ClearedAtom normalize_atom(const RationalFunction& lhs, RelOp op, const RationalFunction& rhs) {
  RationalFunction diff = lhs - rhs;
  return ClearedAtom{diff.num(), diff.den(), op};
}

ClearedAtom normalize_atom(const Atom& atom) { return ClearedAtom{atom.lhs.num(), atom.lhs.den(), atom.op}; }

namespace {

Formula poly_atom(const Polynomial& p, RelOp op) { return Formula::atom(RationalFunction(p), op); }

Formula nonzero(const Polynomial& g) { return poly_atom(g, RelOp::Ne); }

} // namespace

Formula clear_equality(const ClearedAtom& a) {
  if (a.g.is_one()) return poly_atom(a.f, a.op);
  return Formula::conj({poly_atom(a.f, a.op), nonzero(a.g)});
}

Formula clear_bdc(const ClearedAtom& a) {
  if (is_equality(a.op)) return clear_equality(a);
  if (a.g.is_one()) return poly_atom(a.f, a.op);
  return Formula::conj({poly_atom(a.f * a.g, a.op), nonzero(a.g)});
}

Formula clear_ddc(const ClearedAtom& a) {
  if (is_equality(a.op)) return clear_equality(a);
  if (a.g.is_one()) return poly_atom(a.f, a.op);
  Formula positive = Formula::conj({poly_atom(a.g, RelOp::Gt), poly_atom(a.f, a.op)});
  // 0 op f is f reverse(op) 0.
  Formula negative = Formula::conj({poly_atom(a.g, RelOp::Lt), poly_atom(a.f, reverse(a.op))});
  return Formula::disj({positive, negative});
}

Formula clear_guard(const ClearedAtom& a) {
  if (a.g.is_one()) return poly_atom(a.f, a.op);
  return Formula::conj({Formula::atom(RationalFunction::normalize(a.f, a.g), a.op), nonzero(a.g)});
}

Formula apply_strategy(const Formula& f, Strategy s) {
  return map_atoms(to_nnf(f), [s](const Atom& atom) {
    if (atom.lhs.is_polynomial()) return Formula::atom(atom.lhs, atom.op);
    ClearedAtom a = normalize_atom(atom);
    if (is_equality(a.op)) return clear_equality(a);
    switch (s) {
    case Strategy::Guard: return clear_guard(a);
    case Strategy::Bdc: return clear_bdc(a);
    case Strategy::Ddc: return clear_ddc(a);
    }
    return clear_guard(a);
  });
}

Formula reduce_radicals(const Formula& f, const std::vector<Integer>& radicands) {
  if (radicands.empty()) return f;
  return map_atoms(f, [&](const Atom& atom) {
    Polynomial num = atom.lhs.num();
    Polynomial den = atom.lhs.den();
    for (const auto& d : radicands) {
      std::string y = encoded_radical_var(d);
      num = reduce_mod_quadratic(num, y, d);
      den = reduce_mod_quadratic(den, y, d);
    }
    return Formula::atom(RationalFunction::normalize(std::move(num), std::move(den)), atom.op);
  });
}

AlgebraicEncoding encode_algebraic(const Formula& f, bool reduce) {
  AlgebraicEncoding out;
  Substitution renames;
  std::vector<Formula> side;
  for (const auto& v : f.variables()) {
    auto d = radical_radicand(v);
    if (!d) continue;
    if (sgn(*d) <= 0) throw NegativeRadicand(d->get_str());
    Polynomial y = Polynomial::variable(encoded_radical_var(*d));
    renames.emplace(v, RationalFunction(y));
    side.push_back(Formula::atom(RationalFunction(y * y - Polynomial(Rational(*d))), RelOp::Eq));
    side.push_back(Formula::atom(RationalFunction(y), RelOp::Gt));
    out.radicands.push_back(*d);
  }
  out.formula = substitute(f, renames);
  if (reduce) out.formula = reduce_radicals(out.formula, out.radicands);
  out.side_conditions = Formula::conj(std::move(side));
  return out;
}

} // namespace nraprove
