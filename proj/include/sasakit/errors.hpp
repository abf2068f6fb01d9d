#pragma once

#include <stdexcept>
#include <string>

namespace sasakit {

// Base class for all library errors. Commands map subclasses to exit codes.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid spectral input (exit code 2).
class EigenvalueOutOfRange : public Error {
public:
  using Error::Error;
};

class EmptySpec : public Error {
public:
  using Error::Error;
};

class SpecParseError : public Error {
public:
  using Error::Error;
};

// Reeb parameter outside (-1/2, inf) (exit code 2).
class ReebParameterOutOfRange : public Error {
public:
  using Error::Error;
};

// Internal failure to bracket or cross-check the root (exit code 3).
class SolverFailure : public Error {
public:
  using Error::Error;
};

// Requested quadrature tolerance not met within the subdivision budget
// (exit code 4).
class QuadratureFailure : public Error {
public:
  using Error::Error;
};

// Argument outside the open moment interval or other domain violation.
class DomainError : public Error {
public:
  using Error::Error;
};

// A metric positivity margin came out non-positive while building a profile
// (exit code 5); signals a wrong Reeb parameter or broken quadrature.
class PositivityViolation : public Error {
public:
  using Error::Error;
};

}  // namespace sasakit
