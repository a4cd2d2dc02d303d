#ifndef NRAPROVE_ALGEBRA_POLYNOMIAL_HPP
#define NRAPROVE_ALGEBRA_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nraprove {

using Integer = mpz_class;
using Rational = mpq_class;

// Values for variables, keyed by name.
using Assignment = std::map<std::string, Rational, std::less<>>;

// Canonical variable order: plain string order, except that runs of digits
// compare numerically (x_s2 before x_s10).
bool var_less(std::string_view a, std::string_view b);

struct VarLess {
  bool operator()(std::string_view a, std::string_view b) const { return var_less(a, b); }
};

// Power product with positive exponents, factors sorted by var_less.
class Monomial {
public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  // Merges repeated variables and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);

  static Monomial variable(std::string name, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned degree(std::string_view var) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other) to hold for `other / *this`.
  Monomial operator/(const Monomial& divisor) const;
  Monomial without(std::string_view var) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Factor> factors_;
};

// Graded lexicographic comparison under var_less. Returns <0, 0 or >0.
int compare_grlex(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) > 0; }
};

// Sparse multivariate polynomial over Q. Terms are kept in descending
// graded lexicographic order, so the first term is the leading one. The zero
// polynomial has no terms.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  // Degree of the zero polynomial.
  static constexpr int kMinusInfinity = INT_MIN;

  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial variable(std::string name);
  static Polynomial term(const Rational& coeff, Monomial m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Constant term (zero if absent).
  Rational constant_term() const;

  int degree() const;
  int degree(std::string_view var) const;
  std::vector<std::string> variables() const;
  bool contains(std::string_view var) const;

  // Precondition: !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  // View as a univariate polynomial in `var`: exponent -> coefficient.
  std::map<unsigned, Polynomial> coefficients_in(std::string_view var) const;

  // Throws UnboundVariable if a variable is missing from the point.
  Rational eval(const Assignment& point) const;

  // Positive rational c such that *this / c has coprime integer coefficients.
  // One for the zero polynomial.
  Rational content() const;
  // Integer content one and positive leading coefficient. Zero stays zero.
  Polynomial normalized() const;

  // Infix rendering, e.g. "x_1^2 - x_1 + 1".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

// Total order used for deterministic sorting; <0, 0, >0.
int compare(const Polynomial& a, const Polynomial& b);

// Quotient when `divisor` divides `dividend` exactly, nullopt otherwise.
// Precondition: divisor is nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor);

// Pseudo-remainder of a by b with respect to `var`. Precondition: b nonzero.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::string_view var);

// Normalized greatest common divisor; gcd(p, 0) is p normalized and
// gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Rewrites every power of `y` modulo y^2 - d, leaving degree at most one in y.
Polynomial reduce_mod_quadratic(const Polynomial& p, std::string_view y, const Integer& d);

std::string to_string(const Rational& q);

} // namespace nraprove

#endif
