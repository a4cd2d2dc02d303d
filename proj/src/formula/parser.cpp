#include "nraprove/formula/parser.hpp"

#include "nraprove/errors.hpp"
#include "nraprove/formula/symbols.hpp"

#include <cctype>
#include <string>

namespace nraprove {

namespace {

constexpr unsigned kMaxExponent = 1000;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse_full_expression() {
    RationalFunction e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  Formula parse_full_relation() {
    RationalFunction lhs = expression();
    skip_space();
    RelOp op = relop();
    RationalFunction rhs = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return Formula::relation(lhs, op, rhs);
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RelOp relop() {
    static constexpr std::string_view ops[] = {">=", "<=", "!=", ">", "<", "="};
    for (auto op : ops) {
      if (text_.substr(pos_, op.size()) == op) {
        pos_ += op.size();
        return *parse_relop(op);
      }
    }
    fail("expected a relation symbol");
  }

  RationalFunction expression() {
    RationalFunction acc = term();
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t at = pos_;
    Integer e = integer_literal();
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    if (peek() == '^') fail("chained '^' is ambiguous; use parentheses");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Integer integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(integer_literal()));
    if (c == '(') {
      ++pos_;
      RationalFunction e = expression();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string name = identifier();
      if (name == "s" && peek() == '(') {
        expect('(');
        skip_space();
        if (identifier() != kFreeTerm) throw ParseError("s(...) applies only to x", at);
        expect(')');
        return RationalFunction(Polynomial::variable(shift_var(1)));
      }
      if (name == "sqrt" && peek() == '(') {
        expect('(');
        bool negative = accept('-');
        Integer d = integer_literal();
        expect(')');
        if (negative) d = -d;
        return RationalFunction(Polynomial::variable(radical_symbol(d)));
      }
      return RationalFunction(Polynomial::variable(name));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_expression(std::string_view text) { return Parser(text).parse_full_expression(); }

Formula parse_relation(std::string_view text) { return Parser(text).parse_full_relation(); }

} // namespace nraprove
