#include "boolfrac/error.hpp"

#include <utility>

namespace boolfrac {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSpaceMismatch: return "SpaceMismatch";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kInvalidSpace: return "InvalidSpace";
    case ErrorKind::kInvalidEvent: return "InvalidEvent";
    case ErrorKind::kUnknownAtom: return "UnknownAtom";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kDuplicateName: return "DuplicateName";
    case ErrorKind::kNotDisjoint: return "NotDisjoint";
    case ErrorKind::kNotAPartition: return "NotAPartition";
    case ErrorKind::kZeroCondition: return "ZeroCondition";
    case ErrorKind::kBadWeight: return "BadWeight";
    case ErrorKind::kZeroTotalWeight: return "ZeroTotalWeight";
    case ErrorKind::kUnknownLaw: return "UnknownLaw";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string describe(std::size_t line, std::size_t column, const std::vector<std::string>& expected,
                     const std::string& message) {
  std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
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

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& message)
    : Error(ErrorKind::kParse, describe(line, column, expected, message)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace boolfrac
