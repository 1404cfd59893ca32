#include "parser.hpp"

#include "boolfrac/error.hpp"
#include "lexer.hpp"

namespace boolfrac {

namespace detail {

namespace {

bool is_keyword(std::string_view word) { return word == "and" || word == "or"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse() {
    Expr e = given();
    if (peek().kind != Tok::kEnd) fail({"'|'", "'or'", "'and'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& peek_next() const { return tokens_[pos_ + 1 < tokens_.size() ? pos_ + 1 : pos_]; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool at_word(std::string_view word) const { return peek().kind == Tok::kWord && peek().text == word; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), "unexpected " + describe(t));
  }

  void expect(Tok kind, std::vector<std::string> expected) {
    if (peek().kind != kind) fail(std::move(expected));
    take();
  }

  Expr given() {
    Expr lhs = disjunction();
    while (peek().kind == Tok::kPipe) {
      take();
      lhs = Expr::binary(Expr::Kind::kGiven, std::move(lhs), disjunction());
    }
    return lhs;
  }

  Expr disjunction() {
    Expr lhs = conjunction();
    while (at_word("or")) {
      take();
      lhs = Expr::binary(Expr::Kind::kOr, std::move(lhs), conjunction());
    }
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = negation();
    while (at_word("and")) {
      take();
      lhs = Expr::binary(Expr::Kind::kAnd, std::move(lhs), negation());
    }
    return lhs;
  }

  Expr negation() {
    if (peek().kind == Tok::kTilde) {
      take();
      return Expr::negate(negation());
    }
    return primary();
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kLParen: {
        take();
        Expr inner = given();
        expect(Tok::kRParen, {"'|'", "'or'", "'and'", "')'"});
        return inner;
      }
      case Tok::kLBrace:
        return set_literal();
      case Tok::kWord: {
        if (is_keyword(t.text)) break;
        if (auto func = parse_func(t.text); func && peek_next().kind == Tok::kLParen) {
          take();
          take();
          Expr lhs = given();
          expect(Tok::kComma, {"'|'", "'or'", "'and'", "','"});
          Expr rhs = given();
          expect(Tok::kRParen, {"'|'", "'or'", "'and'", "')'"});
          return Expr::call(*func, std::move(lhs), std::move(rhs));
        }
        return Expr::ref(take().text);
      }
      default:
        break;
    }
    fail({"identifier", "'{'", "'('", "'~'"});
  }

  Expr set_literal() {
    take();
    std::vector<std::string> atoms;
    if (peek().kind == Tok::kRBrace) {
      take();
      return Expr::set(std::move(atoms));
    }
    for (;;) {
      if (peek().kind != Tok::kWord) fail({"atom name"});
      atoms.push_back(take().text);
      if (peek().kind == Tok::kComma) {
        take();
        continue;
      }
      if (peek().kind == Tok::kRBrace) {
        take();
        return Expr::set(std::move(atoms));
      }
      fail({"','", "'}'"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr_at(std::string_view text, std::size_t line, std::size_t first_column) {
  return Parser(tokenize(text, line, first_column)).parse();
}

}  // namespace detail

std::string_view to_string(Func f) {
  switch (f) {
    case Func::kOsum: return "osum";
    case Func::kProj: return "proj";
    case Func::kSchayAnd: return "s_and";
    case Func::kSchayOr: return "s_or";
    case Func::kSchayCap: return "s_cap";
    case Func::kSchayCup: return "s_cup";
  }
  return "?";
}

std::optional<Func> parse_func(std::string_view name) {
  for (Func f : {Func::kOsum, Func::kProj, Func::kSchayAnd, Func::kSchayOr, Func::kSchayCap, Func::kSchayCup}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Expr Expr::ref(std::string name) {
  Expr e;
  e.kind = Kind::kRef;
  e.name = std::move(name);
  return e;
}

Expr Expr::set(std::vector<std::string> atoms) {
  Expr e;
  e.kind = Kind::kSet;
  e.atoms = std::move(atoms);
  return e;
}

Expr Expr::negate(Expr operand) {
  Expr e;
  e.kind = Kind::kNot;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

Expr Expr::call(Func func, Expr lhs, Expr rhs) {
  Expr e = binary(Kind::kFunc, std::move(lhs), std::move(rhs));
  e.func = func;
  return e;
}

Expr parse_expr(std::string_view text) { return detail::parse_expr_at(text, 1, 1); }

namespace {

// Binding strength; leaves and calls bind tightest.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kGiven: return 1;
    case Expr::Kind::kOr: return 2;
    case Expr::Kind::kAnd: return 3;
    case Expr::Kind::kNot: return 4;
    default: return 5;
  }
}

std::string join_atoms(const std::vector<std::string>& atoms) {
  std::string out = "{";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += ',';
    out += atoms[i];
  }
  return out + "}";
}

const char* infix(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::kGiven: return " | ";
    case Expr::Kind::kOr: return " or ";
    case Expr::Kind::kAnd: return " and ";
    default: return " ? ";
  }
}

std::string source(const Expr& e, bool full) {
  switch (e.kind) {
    case Expr::Kind::kRef: return e.name;
    case Expr::Kind::kSet: return join_atoms(e.atoms);
    case Expr::Kind::kFunc:
      return std::string(to_string(e.func)) + "(" + source(e.operands[0], full) + ", " +
             source(e.operands[1], full) + ")";
    case Expr::Kind::kNot: {
      const Expr& inner = e.operands[0];
      const bool wrap = full ? precedence(inner) < 5 : precedence(inner) < 4;
      const std::string body = source(inner, full);
      return "~" + (wrap ? "(" + body + ")" : body);
    }
    default: {
      const int p = precedence(e);
      const Expr& lhs = e.operands[0];
      const Expr& rhs = e.operands[1];
      // Left-associative: an equal-precedence right operand needs parentheses.
      const bool wrap_lhs = full ? precedence(lhs) < 5 : precedence(lhs) < p;
      const bool wrap_rhs = full ? precedence(rhs) < 5 : precedence(rhs) <= p;
      std::string l = source(lhs, full);
      std::string r = source(rhs, full);
      if (wrap_lhs) l = "(" + l + ")";
      if (wrap_rhs) r = "(" + r + ")";
      return l + infix(e.kind) + r;
    }
  }
}

std::string dump_impl(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kRef: return "(ref " + e.name + ")";
    case Expr::Kind::kSet: return "(set " + join_atoms(e.atoms) + ")";
    case Expr::Kind::kNot: return "(not " + dump_impl(e.operands[0]) + ")";
    case Expr::Kind::kAnd: return "(and " + dump_impl(e.operands[0]) + " " + dump_impl(e.operands[1]) + ")";
    case Expr::Kind::kOr: return "(or " + dump_impl(e.operands[0]) + " " + dump_impl(e.operands[1]) + ")";
    case Expr::Kind::kGiven:
      return "(given " + dump_impl(e.operands[0]) + " " + dump_impl(e.operands[1]) + ")";
    case Expr::Kind::kFunc:
      return "(" + std::string(to_string(e.func)) + " " + dump_impl(e.operands[0]) + " " +
             dump_impl(e.operands[1]) + ")";
  }
  return "?";
}

}  // namespace

std::string to_source(const Expr& e, bool fully_parenthesized) { return source(e, fully_parenthesized); }

std::string dump(const Expr& e) { return dump_impl(e); }

}  // namespace boolfrac
