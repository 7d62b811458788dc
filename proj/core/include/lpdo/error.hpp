#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpdo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Division by the zero element of Q(x,y).
class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by the zero rational function") {}
};

/// An operation was called outside its domain. `predicate()` names the
/// violated condition, e.g. "order(F) == 1".
class PreconditionError : public Error {
  public:
    explicit PreconditionError(std::string predicate)
        : Error("precondition violated: " + predicate), predicate_(std::move(predicate)) {}
    const std::string &predicate() const noexcept { return predicate_; }

  private:
    std::string predicate_;
};

/// Raised when an exact computation contradicts a theorem the algorithm
/// relies on. Seeing one means a bug or a false theorem, never bad input.
class InconsistencyError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(std::string message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          message_(std::move(message)), position_(position) {}
    std::size_t position() const noexcept { return position_; }
    const std::string &message() const noexcept { return message_; }

  private:
    std::string message_;
    std::size_t position_;
};

} // namespace lpdo
