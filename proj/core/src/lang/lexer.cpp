#include "lexer.hpp"

#include "boolfrac/error.hpp"

namespace boolfrac::detail {

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kWord: return "'" + t.text + "'";
    case Tok::kEnd: return "end of input";
    default: return "'" + t.text + "'";
  }
}

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' || ch == '\f'; }

bool is_word_char(char ch) {
  switch (ch) {
    case '{': case '}': case ',': case '|': case '(': case ')': case '~': case '#': case '=':
      return false;
    default:
      return !is_space(ch);
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t first_column) {
  std::vector<Token> out;
  std::size_t column = first_column;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (is_space(ch)) {
      ++column;
      ++i;
      continue;
    }
    Tok kind = Tok::kWord;
    switch (ch) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '{': kind = Tok::kLBrace; break;
      case '}': kind = Tok::kRBrace; break;
      case ',': kind = Tok::kComma; break;
      case '|': kind = Tok::kPipe; break;
      case '~': kind = Tok::kTilde; break;
      case '#': case '=':
        throw ParseError(line, column, {}, std::string("unexpected character '") + ch + "'");
      default: break;
    }
    if (kind != Tok::kWord) {
      out.push_back({kind, std::string(1, ch), line, column});
      ++column;
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && is_word_char(text[i])) ++i;
    out.push_back({Tok::kWord, std::string(text.substr(start, i - start)), line, column});
    column += i - start;
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

}  // namespace boolfrac::detail
