#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolfrac {

enum class ErrorKind {
  kSpaceMismatch,
  kTooLarge,
  kInvalidSpace,
  kInvalidEvent,
  kUnknownAtom,
  kUnknownName,
  kDuplicateName,
  kNotDisjoint,
  kNotAPartition,
  kZeroCondition,
  kBadWeight,
  kZeroTotalWeight,
  kUnknownLaw,
  kParse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the expression and space-file parsers. Line and column are
/// 1-based; `expected` lists the tokens that would have been accepted.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Space-file errors other than syntax (unknown atom, bad weight, ...) keep
/// their own kind but still carry the offending line.
class LocatedError : public Error {
 public:
  LocatedError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace boolfrac
