#ifndef PWT_ERRORS_HPP
#define PWT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pwt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Velocity reached zero or below on some leg (overloaded vehicle).
struct DegenerateVelocity : Error {
  using Error::Error;
};

// Operation called outside its stated precondition.
struct PreconditionViolated : Error {
  using Error::Error;
};

struct DuplicateName : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct InvalidPermutation : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line = 0)
      : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_number(line) {}
  int line_number;
};

struct CountMismatch : ParseError {
  using ParseError::ParseError;
};

}  // namespace pwt

#endif
