#include "nraprove/induction/catalog.hpp"

#include "nraprove/errors.hpp"

namespace nraprove {

namespace {

const std::vector<std::string> kSumAssumptions{"x > 0", "X = Y"};

SequenceVarText counter() { return {"X", "1", "X + 1"}; }
SequenceVarText running_sum() { return {"Y", "x", "Y + s(x)"}; }

const char* kSummand = "(x^4 + x^2 + 1)/(x^2 + x + 1)";
const char* kShiftedSummand = "(s(x)^4 + s(x)^2 + 1)/(s(x)^2 + s(x) + 1)";

} // namespace

ProblemSpec product_problem() {
  return make_problem("product", 1, {counter(), running_sum(), {"Z", "x", "Z*s(x)"}}, kSumAssumptions, "Z <= 1");
}

ProblemSpec rational_sum_problem() {
  return make_problem("Zh", 1,
                      {counter(), running_sum(), {"Zh", kSummand, std::string("Zh + ") + kShiftedSummand}},
                      kSumAssumptions, "Zh >= X");
}

ProblemSpec weighted_sum_problem() {
  return make_problem("Zt", 1,
                      {counter(), running_sum(),
                       {"Zt", std::string("(x - 1)*") + kSummand,
                        std::string("Zt + (s(x) - 1)*") + kShiftedSummand}},
                      kSumAssumptions, "Zt >= 0");
}

ProblemSpec power_weighted_problem(unsigned j) {
  if (j < 1) throw ProblemError("power index j must be at least 1");
  const std::string e = std::to_string(j - 1);
  return make_problem("Zb_j" + std::to_string(j), 1,
                      {counter(), running_sum(),
                       {"Zb", "x^" + e + "*(x - 1)*" + kSummand,
                        "Zb + s(x)^" + e + "*(s(x) - 1)*" + kShiftedSummand}},
                      kSumAssumptions, "Zb >= 0");
}

ProblemSpec harmonic_problem() {
  return make_problem("harmonic", 1, {counter(), running_sum(), {"H", "1/x", "H + 1/s(x)"}}, kSumAssumptions,
                      "H >= X");
}

ProblemSpec lucas_problem() {
  return make_problem("lucas_sqrt5", 1,
                      {{"P", "(1 + sqrt(5))/2", "P*(1 + sqrt(5))/2"}, {"Q", "(1 - sqrt(5))/2", "Q*(1 - sqrt(5))/2"}},
                      {}, "P + Q >= 1");
}

std::vector<ProblemSpec> example_problems() {
  std::vector<ProblemSpec> all{product_problem(), rational_sum_problem(), weighted_sum_problem()};
  for (unsigned j = 1; j <= 5; ++j) all.push_back(power_weighted_problem(j));
  all.push_back(harmonic_problem());
  all.push_back(lucas_problem());
  return all;
}

std::optional<ProblemSpec> find_example(std::string_view name) {
  for (auto& p : example_problems())
    if (p.name == name) return p;
  return std::nullopt;
}

} // namespace nraprove
