#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolfrac/conditional.hpp"
#include "boolfrac/probability.hpp"

namespace boolfrac {

enum class Func { kOsum, kProj, kSchayAnd, kSchayOr, kSchayCap, kSchayCup };

std::string_view to_string(Func f);
std::optional<Func> parse_func(std::string_view name);

/// Expression tree. Names are resolved at lowering time, not parse time.
struct Expr {
  enum class Kind { kRef, kSet, kNot, kAnd, kOr, kGiven, kFunc };

  Kind kind = Kind::kRef;
  std::string name;                // kRef
  std::vector<std::string> atoms;  // kSet
  Func func = Func::kOsum;         // kFunc
  std::vector<Expr> operands;      // one for kNot, two for the binary kinds

  static Expr ref(std::string name);
  static Expr set(std::vector<std::string> atoms);
  static Expr negate(Expr operand);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
  static Expr call(Func func, Expr lhs, Expr rhs);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Precedence, tightest first: `~`, `and`, `or`, `|`. The binary operators
/// are left-associative, so `a|b|c` is `((a|b)|c)`. Throws ParseError.
Expr parse_expr(std::string_view text);

/// Source text with the fewest parentheses the precedence rules allow, or
/// with every compound subexpression parenthesized.
std::string to_source(const Expr& e, bool fully_parenthesized = false);

/// S-expression dump, e.g. `(given (ref two) (ref even))`.
std::string dump(const Expr& e);

/// A parsed space file: the sample space with its named events and measures.
class SpaceDoc {
 public:
  explicit SpaceDoc(SampleSpace space) : space_(std::move(space)) {}

  const SampleSpace& space() const noexcept { return space_; }
  const std::vector<std::pair<std::string, Event>>& events() const noexcept { return events_; }
  const std::vector<std::pair<std::string, Measure>>& measures() const noexcept { return measures_; }

  const Event* find_event(std::string_view name) const;
  const Measure* find_measure(std::string_view name) const;

  /// Throws DuplicateName.
  void add_event(std::string name, Event e);
  void add_measure(std::string name, Measure m);

 private:
  SampleSpace space_;
  std::vector<std::pair<std::string, Event>> events_;
  std::vector<std::pair<std::string, Measure>> measures_;
};

/// Line-oriented space format:
///
///     space DIE
///     atoms 1 2 3 4 5 6
///     event even = {2,4,6}
///     event odd  = ~even
///     measure uniform = 1 1 1 1 1 1
///
/// `#` starts a comment. Event definitions are Boolean expressions over set
/// literals and earlier event names. Weights are `p` or `p/q`.
SpaceDoc parse_space(std::string_view text);

/// Lowers onto the conditional algebra: leaves become (e|Ω), `~`, `and`,
/// `or` and `|` map to negation, conjunction, disjunction and iterated
/// conditioning, and the named functions to osum, the Sasaki projection and
/// Schay's operations. Throws UnknownName and UnknownAtom.
Conditional lower(const Expr& e, const SpaceDoc& doc);

/// Boolean value of an event-only expression; throws ParseError when the
/// expression uses `|` or a named function.
Event lower_event(const Expr& e, const SpaceDoc& doc);

/// `({a,b}|{c,d})` with atoms in declaration order, or `UNDEFINED` for U.
std::string format_conditional(const Conditional& c, const SampleSpace& space);

/// `({a,b}|{c,d})` for every conditional, U included; parses and lowers back
/// to the same conditional.
std::string to_literal_expr(const Conditional& c, const SampleSpace& space);

}  // namespace boolfrac
