#pragma once

#include <stdexcept>
#include <string>

namespace costas {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied parameters outside an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined request: division by zero, log of a
// non-positive number, mixed radicands, zero inverse.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A search exceeded its configured candidate budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace costas
