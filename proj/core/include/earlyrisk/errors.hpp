#pragma once

#include <stdexcept>
#include <string>

namespace earlyrisk {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data (bad JSON line, inconsistent vector file, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A contract violation: bad arguments, inconsistent state, unknown token.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem problems: missing file, unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure, e.g. a diverging training run.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace earlyrisk
