#include "nraprove/formula/symbols.hpp"

#include <cctype>

namespace nraprove {

namespace {

// Positive decimal integer without a leading zero.
std::optional<unsigned> parse_index(std::string_view digits) {
  if (digits.empty() || digits.size() > 9 || digits.front() == '0') return std::nullopt;
  unsigned v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

std::optional<Integer> parse_signed(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  std::size_t start = digits.front() == '-' ? 1 : 0;
  if (start == digits.size()) return std::nullopt;
  for (std::size_t i = start; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) return std::nullopt;
  return Integer(std::string(digits));
}

} // namespace

std::string shift_var(unsigned level) {
  if (level == 0) return std::string(kFreeTerm);
  return "x_s" + std::to_string(level);
}

std::optional<unsigned> shift_level(std::string_view name) {
  if (name == kFreeTerm) return 0u;
  if (name.substr(0, 3) != "x_s") return std::nullopt;
  return parse_index(name.substr(3));
}

std::string index_var(unsigned i) { return "x_" + std::to_string(i); }

std::string radical_symbol(const Integer& radicand) { return "sqrt(" + radicand.get_str() + ")"; }

std::optional<Integer> radical_radicand(std::string_view name) {
  if (name.size() < 7 || name.substr(0, 5) != "sqrt(" || name.back() != ')') return std::nullopt;
  return parse_signed(name.substr(5, name.size() - 6));
}

std::string encoded_radical_var(const Integer& radicand) { return "y_" + radicand.get_str(); }

std::optional<Integer> encoded_radicand(std::string_view name) {
  if (name.substr(0, 2) != "y_") return std::nullopt;
  auto v = parse_index(name.substr(2));
  if (!v) return std::nullopt;
  return Integer(*v);
}

bool is_shift_constant(std::string_view name) {
  return radical_radicand(name).has_value() || encoded_radicand(name).has_value();
}

bool is_user_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  if (name == kFreeTerm || name == "s" || name == "sqrt") return false;
  if (name.substr(0, 2) == "x_" || name.substr(0, 2) == "y_") return false;
  // Symbols with a fixed meaning in SMT-LIB scripts.
  static constexpr std::string_view smt_words[] = {"and", "or", "not", "xor", "true", "false", "ite",
                                                   "let", "exists", "forall", "distinct", "Real",
                                                   "Int", "Bool", "abs", "div", "mod"};
  for (auto w : smt_words)
    if (name == w) return false;
  return true;
}

} // namespace nraprove
