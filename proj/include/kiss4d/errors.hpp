#pragma once

#include <stdexcept>
#include <string>

namespace kiss4d {

// Base of every error the library raises. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input point is not on the unit sphere.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain (distances outside [0, 2], bad indices, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Phi offset requested for antipodal circles.
class UndefinedOffsetError : public Error {
 public:
  using Error::Error;
};

class DuplicatePointError : public Error {
 public:
  using Error::Error;
};

class GroupingAmbiguityError : public Error {
 public:
  using Error::Error;
};

class NonGenericRotationError : public Error {
 public:
  using Error::Error;
};

// Operation called on a configuration or graph that violates its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A result contradicts a property that must hold for valid input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class SearchError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration document. Carries the line and field where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, std::string field)
      : Error(format(message, line, field)), line_(line), field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& message, int line, const std::string& field) {
    std::string out = "parse error";
    if (line > 0) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " in field '" + field + "'";
    return out + ": " + message;
  }

  int line_;
  std::string field_;
};

}  // namespace kiss4d
