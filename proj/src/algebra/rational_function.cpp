#include "nraprove/algebra/rational_function.hpp"

#include "nraprove/errors.hpp"

#include <set>

namespace nraprove {

RationalFunction RationalFunction::normalize(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) return RationalFunction();
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  Rational c = den.content();
  if (sgn(den.leading_coefficient()) < 0) c = -c;
  if (c != 1) {
    Rational inv = 1 / c;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RationalFunction(std::move(num), std::move(den), 0);
}

std::vector<std::string> RationalFunction::variables() const {
  std::set<std::string, VarLess> vars;
  for (auto& v : num_.variables()) vars.insert(v);
  for (auto& v : den_.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction::normalize(a.num_ + b.num_, a.den_);
  return RationalFunction::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  return RationalFunction::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZeroFunction();
  return RationalFunction::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  // Powers of coprime factors stay coprime.
  return RationalFunction(num_.pow(e), den_.pow(e), 0);
}

std::optional<Rational> RationalFunction::eval(const Assignment& point) const {
  Rational d = den_.eval(point);
  Rational n = num_.eval(point);
  if (sgn(d) == 0) return std::nullopt;
  return n / d;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

int compare(const RationalFunction& a, const RationalFunction& b) {
  if (int c = compare(a.num(), b.num()); c != 0) return c;
  return compare(a.den(), b.den());
}

namespace {

// Numerator and denominator of the substituted polynomial, not yet reduced.
std::pair<Polynomial, Polynomial> substitute_parts(const Polynomial& p, const Substitution& bindings) {
  // Largest power of each bound variable with a nontrivial denominator.
  std::map<std::string, unsigned, std::less<>> max_exp;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end() || it->second.is_polynomial()) continue;
      unsigned& slot = max_exp[v];
      if (e > slot) slot = e;
    }

  std::map<std::pair<std::string, unsigned>, Polynomial> num_pow, den_pow;
  auto num_power = [&](const std::string& v, const Polynomial& base, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = num_pow.find(key);
    if (it == num_pow.end()) it = num_pow.emplace(key, base.pow(e)).first;
    return it->second;
  };
  auto den_power = [&](const std::string& v, const Polynomial& base, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = den_pow.find(key);
    if (it == den_pow.end()) it = den_pow.emplace(key, base.pow(e)).first;
    return it->second;
  };

  Polynomial num;
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::term(c, Monomial());
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      t *= num_power(v, it->second.num(), e);
      if (!it->second.is_polynomial()) {
        unsigned top = max_exp[v];
        if (top > e) t *= den_power(v, it->second.den(), top - e);
      }
    }
    // Variables absent from the term still contribute their full denominator power.
    for (const auto& [v, top] : max_exp) {
      if (m.degree(v) == 0) t *= den_power(v, bindings.find(v)->second.den(), top);
    }
    num += t.mul_term(Rational(1), Monomial(std::move(kept)));
  }
  Polynomial den(1);
  for (const auto& [v, top] : max_exp) den *= den_power(v, bindings.find(v)->second.den(), top);
  return {std::move(num), std::move(den)};
}

} // namespace

RationalFunction substitute(const Polynomial& p, const Substitution& bindings) {
  auto [num, den] = substitute_parts(p, bindings);
  if (den.is_one()) return RationalFunction(std::move(num));
  return RationalFunction::normalize(std::move(num), std::move(den));
}

RationalFunction substitute(const RationalFunction& f, const Substitution& bindings) {
  if (f.is_polynomial()) return substitute(f.num(), bindings);
  auto [n1, d1] = substitute_parts(f.num(), bindings);
  auto [n2, d2] = substitute_parts(f.den(), bindings);
  if (n2.is_zero()) throw ZeroDenominator();
  return RationalFunction::normalize(n1 * d2, d1 * n2);
}

Polynomial rename_variables(const Polynomial& p, const std::map<std::string, std::string, std::less<>>& names) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : m.factors()) {
      auto it = names.find(v);
      fs.emplace_back(it == names.end() ? v : it->second, e);
    }
    out += Polynomial::term(c, Monomial(std::move(fs)));
  }
  return out;
}

} // namespace nraprove
