#ifndef NRAPROVE_ALGEBRA_RATIONAL_FUNCTION_HPP
#define NRAPROVE_ALGEBRA_RATIONAL_FUNCTION_HPP

#include "nraprove/algebra/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nraprove {

// Quotient num/den of polynomials in canonical form: gcd(num, den) = 1 and
// den has integer content one with a positive leading coefficient. Zero is
// 0/1.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}
  RationalFunction(int c) : RationalFunction(Rational(c)) {}

  // Throws ZeroDenominator when den is the zero polynomial.
  static RationalFunction normalize(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  std::vector<std::string> variables() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  // Throws DivisionByZeroFunction when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(unsigned e) const;

  // Exact value, or nullopt at a pole. Throws UnboundVariable.
  std::optional<Rational> eval(const Assignment& point) const;

  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  RationalFunction(Polynomial num, Polynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

int compare(const RationalFunction& a, const RationalFunction& b);

// Simultaneous substitution of variables by rational functions. Variables
// without a binding are left alone.
using Substitution = std::map<std::string, RationalFunction, std::less<>>;
RationalFunction substitute(const Polynomial& p, const Substitution& bindings);
RationalFunction substitute(const RationalFunction& f, const Substitution& bindings);

// Renames variables in place; no normalization is needed.
Polynomial rename_variables(const Polynomial& p, const std::map<std::string, std::string, std::less<>>& names);

} // namespace nraprove

#endif
