#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgroups {

// Every failure raised by the library derives from Error so callers that only
// care about "did it work" can catch one type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class ArithmeticError : public Error {
public:
  using Error::Error;
};

// Matrix closure produced more elements than the configured budget.
class ClosureOverflow : public Error {
public:
  using Error::Error;
};

// An enumeration-based algorithm was asked to work on a group larger than the
// configured capacity.
class CapacityError : public Error {
public:
  using Error::Error;
};

// A backtracking search ran out of its node budget. The question it was
// answering is undecided, not answered negatively.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::string const &what, std::size_t line = 0)
  : Error(line ? "line " + std::to_string(line) + ": " + what : what),
    _line(line)
  {}

  std::size_t line() const { return _line; }

private:
  std::size_t _line;
};

} // namespace qgroups
