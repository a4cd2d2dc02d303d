#ifndef NRAPROVE_SMTLIB_SEXPR_HPP
#define NRAPROVE_SMTLIB_SEXPR_HPP

#include <string>
#include <string_view>
#include <vector>

namespace nraprove::smtlib {

// Minimal S-expression reader for solver output and script checks.
// Comments (';' to end of line), string literals and |quoted| symbols are
// recognized; quoted symbols keep their bars.
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;

  bool is_atom(std::string_view text) const { return !is_list && atom == text; }
};

// All top-level expressions. Throws ParseError on unbalanced input.
std::vector<SExpr> parse_sexprs(std::string_view text);

std::string to_string(const SExpr& e);

} // namespace nraprove::smtlib

#endif
