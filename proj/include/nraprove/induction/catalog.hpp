#ifndef NRAPROVE_INDUCTION_CATALOG_HPP
#define NRAPROVE_INDUCTION_CATALOG_HPP

#include "nraprove/induction/problem.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace nraprove {

// Worked induction problems shipped with the tool. All share the assumptions
// x > 0 and X = Y, with X counting indices and Y summing the free terms.
ProblemSpec product_problem();         // prod x_i <= 1
ProblemSpec rational_sum_problem();    // sum (x^4+x^2+1)/(x^2+x+1) >= n
ProblemSpec weighted_sum_problem();    // sum (x-1)(x^4+x^2+1)/(x^2+x+1) >= 0
ProblemSpec power_weighted_problem(unsigned j);  // x^(j-1) times the weighted summand, j >= 1
ProblemSpec harmonic_problem();        // sum 1/x_i >= n
ProblemSpec lucas_problem();           // phi^n + psi^n >= 1 with phi, psi = (1 +- sqrt(5))/2

// Every problem above, power_weighted_problem for j = 1..5.
std::vector<ProblemSpec> example_problems();

// nullopt if no example has that name.
std::optional<ProblemSpec> find_example(std::string_view name);

} // namespace nraprove

#endif
