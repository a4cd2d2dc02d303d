#include "nraprove/algebra/polynomial.hpp"

#include "nraprove/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace nraprove {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int natural_compare(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::string_view da = a.substr(i, ie - i), db = b.substr(j, je - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
      if (int c = da.compare(db); c != 0) return c < 0 ? -1 : 1;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
    ++i;
    ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  // Equal up to leading zeros in digit runs.
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Polynomial content_in(const Polynomial& p, std::string_view var) {
  Polynomial g;
  for (const auto& [e, c] : p.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  // Callers only divide by known factors.
  if (!q) throw Error("internal: inexact polynomial division");
  return std::move(*q);
}

} // namespace

bool var_less(std::string_view a, std::string_view b) { return natural_compare(a, b) < 0; }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return var_less(x.first, y.first); });
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(std::move(f));
  }
}

Monomial Monomial::variable(std::string name, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::degree(std::string_view var) const {
  for (const auto& f : factors_)
    if (f.first == var) return f.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->first == j->first) {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (var_less(i->first, j->first)) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, factors_.end());
  out.factors_.insert(out.factors_.end(), j, other.factors_.end());
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_)
    if (other.degree(v) < e) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  for (const auto& [v, e] : factors_) {
    unsigned d = divisor.degree(v);
    if (e > d) out.factors_.emplace_back(v, e - d);
  }
  return out;
}

Monomial Monomial::without(std::string_view var) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != var) out.factors_.push_back(f);
  return out;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? -1 : 1;
      ++i;
      ++j;
    } else {
      // The earlier variable is present in one side only.
      return var_less(fa[i].first, fb[j].first) ? 1 : -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(std::string name) {
  return term(Rational(1), Monomial::variable(std::move(name)));
}

Polynomial Polynomial::term(const Rational& coeff, Monomial m) {
  Polynomial p;
  if (sgn(coeff) != 0) p.terms_.emplace(std::move(m), coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return kMinusInfinity;
  return static_cast<int>(leading_monomial().degree());
}

int Polynomial::degree(std::string_view var) const {
  if (terms_.empty()) return kMinusInfinity;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree(var));
  return static_cast<int>(d);
}

std::vector<std::string> Polynomial::variables() const {
  std::set<std::string, VarLess> vars;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors()) vars.insert(f.first);
  return {vars.begin(), vars.end()};
}

bool Polynomial::contains(std::string_view var) const {
  for (const auto& t : terms_)
    if (t.first.degree(var) > 0) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial out;
  if (sgn(c) == 0) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(std::string_view var) const {
  std::map<unsigned, Polynomial> out;
  for (const auto& [m, c] : terms_) out[m.degree(var)].add_term(m.without(var), c);
  return out;
}

Rational Polynomial::eval(const Assignment& point) const {
  Rational sum(0);
  std::map<std::string_view, std::vector<Rational>> powers;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw UnboundVariable(v);
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(Rational(1));
      while (cache.size() <= e) cache.push_back(cache.back() * it->second);
      t *= cache[e];
    }
    sum += t;
  }
  return sum;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return {};
  Rational c = content();
  if (sgn(leading_coefficient()) < 0) c = -c;
  Rational inv = 1 / c;
  return scaled(inv);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool coeff_shown = !(mag == 1) || m.is_one();
    if (coeff_shown) os << mag.get_str();
    bool sep = coeff_shown;
    for (const auto& [v, e] : m.factors()) {
      if (sep) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      sep = true;
    }
  }
  return os.str();
}

int compare(const Polynomial& a, const Polynomial& b) {
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  for (; i != a.terms().end() && j != b.terms().end(); ++i, ++j) {
    if (int c = compare_grlex(i->first, j->first); c != 0) return c;
    if (int c = cmp(i->second, j->second); c != 0) return c < 0 ? -1 : 1;
  }
  if (i != a.terms().end()) return 1;
  if (j != b.terms().end()) return -1;
  return 0;
}

std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw ZeroDenominator();
  Polynomial q;
  Polynomial r = dividend;
  const Monomial& lm = divisor.leading_monomial();
  const Rational& lc = divisor.leading_coefficient();
  while (!r.is_zero()) {
    if (!lm.divides(r.leading_monomial())) return std::nullopt;
    Monomial m = r.leading_monomial() / lm;
    Rational c = r.leading_coefficient() / lc;
    q += Polynomial::term(c, m);
    r -= divisor.mul_term(c, m);
  }
  return q;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::string_view var) {
  int db = b.degree(var);
  auto bcoeffs = b.coefficients_in(var);
  const Polynomial& lcb = bcoeffs.rbegin()->second;
  Polynomial r = a;
  while (!r.is_zero()) {
    int dr = r.degree(var);
    if (dr < db) break;
    auto rcoeffs = r.coefficients_in(var);
    const Polynomial& lcr = rcoeffs.rbegin()->second;
    Monomial shift = Monomial::variable(std::string(var), static_cast<unsigned>(dr - db));
    r = lcb * r - (lcr * b).mul_term(Rational(1), shift);
  }
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);

  std::string var;
  {
    auto va = a.variables();
    auto vb = b.variables();
    var = va.front();
    if (var_less(vb.front(), var)) var = vb.front();
  }
  if (!a.contains(var)) return gcd(a, content_in(b, var));
  if (!b.contains(var)) return gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = gcd(ca, cb);
  Polynomial pa = exact_quotient(a, ca);
  Polynomial pb = exact_quotient(b, cb);
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);

  Polynomial g;
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(var) == 0) {
      g = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = exact_quotient(r, content_in(r, var)).normalized();
  }
  return (c * g).normalized();
}

Polynomial reduce_mod_quadratic(const Polynomial& p, std::string_view y, const Integer& d) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.degree(y);
    if (e < 2) {
      out += Polynomial::term(c, m);
      continue;
    }
    Integer factor;
    mpz_pow_ui(factor.get_mpz_t(), d.get_mpz_t(), e / 2);
    Monomial rest = m.without(y) * Monomial::variable(std::string(y), e % 2);
    out += Polynomial::term(c * Rational(factor), rest);
  }
  return out;
}

} // namespace nraprove
