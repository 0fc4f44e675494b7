#include "hdepth/errors.hpp"

namespace hdepth {

const char* toString(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyFunction: return "EmptyFunction";
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::InvalidArity: return "InvalidArity";
    case ErrorKind::TooManyForms: return "TooManyForms";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ElaborationError: return "ElaborationError";
    case ErrorKind::InvalidIdeal: return "InvalidIdeal";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected,
                     const std::string& message) {
  std::string out = "at position " + std::to_string(position) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& message)
    : Error(ErrorKind::ParseError, describe(position, expected, message)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace hdepth
