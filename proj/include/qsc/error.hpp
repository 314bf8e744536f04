#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. position() is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public PreconditionError {
 public:
  InexactDivision() : PreconditionError("polynomial division is not exact") {}
};

}  // namespace qsc
