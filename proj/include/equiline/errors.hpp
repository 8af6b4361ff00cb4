#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace equiline {

// Base of every error thrown by the library. Input problems and internal
// inconsistencies are distinguished by subclass so the CLI can map them onto
// exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unparsable text, invalid parameters, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidDiscriminantError : public InputError {
 public:
  using InputError::InputError;
};

class FieldMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class DivisionByZeroError : public InputError {
 public:
  using InputError::InputError;
};

class DegeneratePairError : public InputError {
 public:
  using InputError::InputError;
};

class InsufficientInputError : public InputError {
 public:
  using InputError::InputError;
};

class MissingArgumentError : public InputError {
 public:
  using InputError::InputError;
};

class CapExceededError : public InputError {
 public:
  CapExceededError(const std::string& what, std::string coloring_count)
      : InputError(what), coloring_count_(std::move(coloring_count)) {}
  const std::string& coloring_count() const { return coloring_count_; }

 private:
  std::string coloring_count_;
};

class ParseError : public InputError {
 public:
  ParseError(std::string location, const std::string& message)
      : InputError(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

class DuplicatePointError : public InputError {
 public:
  DuplicatePointError(const std::string& what, std::size_t first, std::size_t second)
      : InputError(what), first_(first), second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

// A counting identity failed. The identities are theorems, so this always
// indicates a defect in line enumeration or profile tallying.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

// A mechanically checked coefficient claim did not hold at some cell.
class ClaimRefutedError : public Error {
 public:
  ClaimRefutedError(const std::string& what, int i, int j) : Error(what), i_(i), j_(j) {}
  int i() const { return i_; }
  int j() const { return j_; }

 private:
  int i_;
  int j_;
};

}  // namespace equiline
