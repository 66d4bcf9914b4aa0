#pragma once

#include <stdexcept>
#include <string>

namespace qsip {

// Root of every exception thrown by the library. Subclasses name the failure
// so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UndefinedValuation : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

// f is not squarefree in the projection variable, so its discriminant vanishes.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class OnBranchLocus : public Error {
 public:
  using Error::Error;
};

class NumericSeparationFailure : public Error {
 public:
  using Error::Error;
};

// Gröbner pair/degree budget exhausted.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qsip
