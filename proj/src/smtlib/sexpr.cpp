#include "nraprove/smtlib/sexpr.hpp"

#include "nraprove/errors.hpp"

#include <cctype>

namespace nraprove::smtlib {

namespace {

class Reader {
public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    while (true) {
      skip();
      if (pos_ >= text_.size()) return out;
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      out.push_back(read());
    }
  }

private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  SExpr read() {
    SExpr e;
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      e.is_list = true;
      while (true) {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unclosed '('", open);
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    std::size_t start = pos_;
    if (c == '"' || c == '|') {
      ++pos_;
      while (pos_ < text_.size()) {
        if (text_[pos_] == c) {
          // "" escapes a quote inside string literals.
          if (c == '"' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
            pos_ += 2;
            continue;
          }
          break;
        }
        ++pos_;
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated literal", start);
      ++pos_;
    } else {
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
        ++pos_;
      }
    }
    e.atom = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) { return Reader(text).all(); }

std::string to_string(const SExpr& e) {
  if (!e.is_list) return e.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += " ";
    out += to_string(e.items[i]);
  }
  return out + ")";
}

} // namespace nraprove::smtlib
