#ifndef NRAPROVE_TESTS_SUPPORT_HPP
#define NRAPROVE_TESTS_SUPPORT_HPP

#include "nraprove/algebra/rational_function.hpp"

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace nraprove::testing {

// Deterministic generators; every property test seeds its own engine.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  Rational rational(int num_bound = 9, int den_bound = 4) {
    Rational q(integer(-num_bound, num_bound), integer(1, den_bound));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(int num_bound = 9, int den_bound = 4) {
    Rational q;
    do q = rational(num_bound, den_bound);
    while (q == 0);
    return q;
  }

  Monomial monomial(const std::vector<std::string>& vars, int max_deg) {
    std::vector<Monomial::Factor> f;
    for (const auto& v : vars) f.emplace_back(v, static_cast<unsigned>(integer(0, max_deg)));
    return Monomial(std::move(f));
  }

  Polynomial polynomial(const std::vector<std::string>& vars, int max_deg, int max_terms) {
    Polynomial p;
    int n = integer(1, max_terms);
    for (int i = 0; i < n; ++i) p += Polynomial::term(rational(), monomial(vars, max_deg));
    return p;
  }

  Polynomial nonzero_polynomial(const std::vector<std::string>& vars, int max_deg, int max_terms) {
    Polynomial p;
    do p = polynomial(vars, max_deg, max_terms);
    while (p.is_zero());
    return p;
  }

  RationalFunction rational_function(const std::vector<std::string>& vars, int max_deg, int max_terms) {
    return RationalFunction::normalize(polynomial(vars, max_deg, max_terms),
                                       nonzero_polynomial(vars, max_deg, max_terms));
  }

  Assignment point(const std::vector<std::string>& vars, int num_bound = 6, int den_bound = 3) {
    Assignment a;
    for (const auto& v : vars) a[v] = rational(num_bound, den_bound);
    return a;
  }

private:
  std::mt19937_64 rng_;
};

inline bool on_path(const std::string& exe) {
  const char* path = std::getenv("PATH");
  if (!path) return false;
  std::string p(path);
  std::size_t start = 0;
  while (start <= p.size()) {
    std::size_t end = p.find(':', start);
    if (end == std::string::npos) end = p.size();
    std::filesystem::path cand = std::filesystem::path(p.substr(start, end - start)) / exe;
    std::error_code ec;
    if (std::filesystem::is_regular_file(cand, ec)) return true;
    start = end + 1;
  }
  return false;
}

} // namespace nraprove::testing

#endif
