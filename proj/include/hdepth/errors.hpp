#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdepth {

enum class ErrorKind {
  EmptyFunction,
  NegativeValue,
  InvalidArity,
  TooManyForms,
  InvalidDegree,
  OutOfRange,
  ParseError,
  ElaborationError,
  InvalidIdeal,
  TooManyVariables,
  GenerationFailed,
};

const char* toString(ErrorKind kind) noexcept;

/// Base error for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in the function DSL or in an ideal description.
/// `position` is a 0-based byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& message);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace hdepth
