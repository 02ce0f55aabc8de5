#pragma once

#include <stdexcept>
#include <string>

namespace eulerian {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

// A map or operation was handed an input outside its declared domain.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// Exhaustive search asked for a size past the configured enumeration bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulerian
