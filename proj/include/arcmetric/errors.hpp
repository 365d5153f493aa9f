#pragma once

#include <stdexcept>
#include <string>

namespace arcmetric {

// Input outside the mathematical domain of an operation (cusp endpoint, NaN, zero lamination).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Surface or class representation with no registered evaluation path.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Path prescription inconsistent with its driving lamination.
class SpecError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed JSON input; carries the offending field path.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace arcmetric
