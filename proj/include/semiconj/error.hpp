#ifndef SEMICONJ_ERROR_HPP_
#define SEMICONJ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace semiconj {

struct Error : std::runtime_error {
  explicit Error(std::string const& msg) : std::runtime_error(msg) {}
};

// Associativity failure; (i, j, k) is the first violating triple.
struct ValidationError : Error {
  int i, j, k;
  ValidationError(int i_, int j_, int k_)
      : Error("associativity fails at (" + std::to_string(i_) + ", "
              + std::to_string(j_) + ", " + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct RangeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line, col;
  ParseError(std::string const& msg, int line_, int col_)
      : Error("parse error at " + std::to_string(line_) + ":"
              + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

struct NoZeroError : Error {
  NoZeroError() : Error("semigroup has no zero element") {}
};

struct NotAGroup : Error {
  using Error::Error;
};

struct BadSandwich : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SizeLimit : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct NotFullInjection : Error {
  NotFullInjection() : Error("type has chains or left rays (dom is not all of X)") {}
};

struct NotEpiElement : Error {
  NotEpiElement() : Error("type has rays or unbounded chain lengths") {}
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace semiconj

#endif  // SEMICONJ_ERROR_HPP_
