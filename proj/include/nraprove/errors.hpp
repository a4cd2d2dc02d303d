#ifndef NRAPROVE_ERRORS_HPP
#define NRAPROVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nraprove {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
public:
  ZeroDenominator() : Error("zero denominator") {}
};

class DivisionByZeroFunction : public Error {
public:
  DivisionByZeroFunction() : Error("division by the zero rational function") {}
};

class UnboundVariable : public Error {
public:
  explicit UnboundVariable(const std::string& var)
      : Error("unbound variable '" + var + "'"), var_(var) {}
  const std::string& variable() const { return var_; }

private:
  std::string var_;
};

class MissingShiftRule : public Error {
public:
  explicit MissingShiftRule(const std::string& var)
      : Error("no shift rule for variable '" + var + "'"), var_(var) {}
  const std::string& variable() const { return var_; }

private:
  std::string var_;
};

class NegativeRadicand : public Error {
public:
  explicit NegativeRadicand(const std::string& radicand)
      : Error("radicand must be a positive integer, got " + radicand) {}
};

class UnsupportedConstruct : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

// Malformed or inconsistent problem description.
class ProblemError : public Error {
public:
  using Error::Error;
};

class MissingSolver : public Error {
public:
  explicit MissingSolver(const std::string& name)
      : Error("solver '" + name + "' has no records") {}
};

} // namespace nraprove

#endif
