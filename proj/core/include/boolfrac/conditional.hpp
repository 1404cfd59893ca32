#pragma once

#include <compare>

#include "boolfrac/event.hpp"

namespace boolfrac {

/// A Boolean fraction (a|b) kept in normal form: the stored consequent is
/// a∧b, so the consequent is always contained in the condition. Equality on
/// the normal form is exactly the equivalence (a|b) = (c|d) iff b = d and
/// ab = cd. The fraction with an empty condition is U, the undefined
/// conditional; every (x|0) normalizes to it.
class Conditional {
 public:
  /// Normal form (a∧b | b). Throws SpaceMismatch.
  static Conditional make(const Event& consequent, const Event& condition);

  const Event& consequent() const noexcept { return consequent_; }
  const Event& condition() const noexcept { return condition_; }
  /// The condition minus the consequent: where the fraction is false.
  Event falsity() const { return meet(complement(consequent_), condition_); }
  bool is_undefined() const noexcept { return condition_.empty(); }
  std::uint32_t space_id() const noexcept { return condition_.space_id(); }

  friend bool operator==(const Conditional&, const Conditional&) = default;
  friend auto operator<=>(const Conditional&, const Conditional&) = default;

 private:
  Conditional(Event consequent, Event condition)
      : consequent_(consequent), condition_(condition) {}

  Event consequent_;
  Event condition_;
};

/// (e|Ω): the plain event e as a conditional.
Conditional plain(const Event& e);
/// (1|b), the unit of the Boolean algebra (ℬ|b).
Conditional unit(const Event& condition);
/// (0|b), the zero of (ℬ|b).
Conditional zero(const Event& condition);
/// U = (0|0).
Conditional undefined(const SampleSpace& space);

/// (a|b)' = (a'|b). Involutive; U maps to itself.
Conditional negation(const Conditional& c);

/// (a|b) ∨ (c|d) = (ab ∨ cd | b ∨ d).
Conditional disjunction(const Conditional& x, const Conditional& y);

/// (a|b) ∧ (c|d) = (abd' ∨ abcd ∨ b'cd | b ∨ d): both true, or one true
/// while the other is inapplicable.
Conditional conjunction(const Conditional& x, const Conditional& y);

/// Iterated conditioning ((a|b) | (c|d)) = (a | b(c ∨ d')).
Conditional given(const Conditional& inner, const Conditional& cond);

/// Total orthoalgebra-style sum (abc'd ∨ a'bcd | b ∨ d). Use
/// `orthogonal` from relations.hpp where the partial reading is wanted.
Conditional osum(const Conditional& x, const Conditional& y);

/// Sasaki projection of `a` onto `b`: b ∧ (b' ∨ a), computed in closed form
/// as (a₁a₂(b₂' ∨ b₁) | a₂ ∨ b₂).
Conditional sasaki(const Conditional& b, const Conditional& a);

}  // namespace boolfrac
