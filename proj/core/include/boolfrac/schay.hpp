#pragma once

#include "boolfrac/conditional.hpp"

/// Schay's operations on conditional events. They act on normal forms; each
/// formula conjoins its consequent with its condition, so normalizing the
/// inputs first does not change any result.
namespace boolfrac::schay {

/// (A|B) ∩ₛ (C|D) = (AC | BD).
Conditional cap(const Conditional& x, const Conditional& y);

/// (A|B) ∪ₛ (C|D) = (AB ∪ CD | B ∪ D), the simplified form. Coincides with
/// `disjunction`.
Conditional cup(const Conditional& x, const Conditional& y);

/// (A|B) ∧ₛ (C|D) = (ABCD ∪ ABD' ∪ B'CD | B ∪ D). Written out from Schay's
/// form independently of `conjunction`, which it must equal.
Conditional wedge(const Conditional& x, const Conditional& y);

/// (A|B) ∨ₛ (C|D) = (A ∪ C | BD).
Conditional vee(const Conditional& x, const Conditional& y);

/// ~(A|B) = (A'|B).
Conditional tilde(const Conditional& x);

/// ((B | A ∪ B) | B') for disjoint A, B; always (0|A). Throws NotDisjoint.
Conditional iteration_example(const Event& a, const Event& b);

}  // namespace boolfrac::schay
