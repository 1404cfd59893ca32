#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace boolfrac::detail {

enum class Tok { kWord, kLParen, kRParen, kLBrace, kRBrace, kComma, kPipe, kTilde, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t);

/// Splits expression text into tokens. Words are maximal runs of characters
/// other than whitespace and `{ } , | ( ) ~ # =`. Columns start at
/// `first_column` on `line`; a newline advances the line.
std::vector<Token> tokenize(std::string_view text, std::size_t line = 1, std::size_t first_column = 1);

}  // namespace boolfrac::detail
