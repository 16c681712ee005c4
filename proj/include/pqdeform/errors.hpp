#pragma once

#include <stdexcept>
#include <string>

#include "pqdeform/signed_log.hpp"

namespace pqdeform {

/// Parameter outside its admitted range (non-positive p or q, NaN, bad preset base).
class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer argument outside the domain of an operation (n = 0 for a bracket,
/// index outside a representation's support, bracket degree too large for a cutoff).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value that does not fit in a double. Carries the value as (sign, ln|value|).
class OutOfRangeError : public std::range_error {
 public:
  OutOfRangeError(const std::string& what, SignedLog value)
      : std::range_error(what), value_(value) {}

  const SignedLog& log_value() const noexcept { return value_; }

 private:
  SignedLog value_;
};

/// A structure function or lambda value that must be nonnegative is negative.
class PositivityError : public std::domain_error {
 public:
  PositivityError(const std::string& what, long index)
      : std::domain_error(what), index_(index) {}

  long index() const noexcept { return index_; }

 private:
  long index_;
};

class ClassificationError : public std::runtime_error {
 public:
  enum class Kind { MissingParameter, NoRepresentation, SingularOperator };

  ClassificationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace pqdeform
