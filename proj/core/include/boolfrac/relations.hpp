#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "boolfrac/conditional.hpp"

namespace boolfrac {

/// Deductive relations between conditionals (a|b) and (c|d):
///   tr     ab ≤ cd                 truth implies truth
///   nf     c'd ≤ a'b               non-falsity implies non-falsity
///   ap     b ≤ d                   applicability implies applicability
///   pm     tr and nf
///   vee    ap and tr
///   wedge  (a|b) ∧ (c|d) = (a|b),  i.e. d ≤ b and c'd ≤ a'b
///   bo     b = d and ab ≤ cd       Boolean deduction within (ℬ|b)
/// U is evaluated literally through its normal form ({}|{}).
enum class Relation { kTr, kNf, kAp, kPm, kVee, kWedge, kBo };

std::string_view to_string(Relation rel);
std::optional<Relation> parse_relation(std::string_view tag);

/// Throws SpaceMismatch.
bool holds(Relation rel, const Conditional& x, const Conditional& y);

/// (a|b) ∧ (c|d) = (0|b∨d), characterized by ab ≤ c'd and cd ≤ a'b.
bool orthogonal(const Conditional& x, const Conditional& y);

/// (a'bx | ab ∨ y). Ranging over all events x, y yields exactly the
/// conditionals orthogonal to c.
Conditional ortho_family_member(const Conditional& c, const Event& x, const Event& y);

/// ab ≤ d and cd ≤ b: the truth of either implies the other is applicable.
bool sim_verifiable(const Conditional& x, const Conditional& y);
/// a'b ≤ d and c'd ≤ b: the negations are simultaneously verifiable.
bool sim_falsifiable(const Conditional& x, const Conditional& y);
/// Equal conditions.
bool compatible(const Conditional& x, const Conditional& y);
/// Equal, nonempty conditions: membership in a common Boolean subalgebra.
bool in_common_subalgebra(const Conditional& x, const Conditional& y);

/// Kinds of simultaneous verifiability for x = (a₁|a₂), y = (b₁|b₂):
///   1  a₁a₂ ≤ b₂
///   2  a₁'a₂ ≤ b₂
///   3  a₁a₂ ≤ b₂ and b₁b₂ ≤ a₂  (sim_verifiable)
///   4  a₁'a₂ ≤ b₂ and b₁'b₂ ≤ a₂  (sim_falsifiable)
///   5  a₁'a₂ ≤ b₂ and b₁b₂ ≤ a₂
///   6  a₂ ≤ b₂
///   7  a₂ = b₂
struct VerifiabilityProfile {
  std::array<bool, 7> flags{};

  bool flag(int number) const { return flags.at(static_cast<std::size_t>(number - 1)); }
  friend bool operator==(const VerifiabilityProfile&, const VerifiabilityProfile&) = default;
};

VerifiabilityProfile profile(const Conditional& x, const Conditional& y);

struct Subalgebra {
  std::vector<Conditional> members;  // sorted
  bool is_boolean = false;
};

/// Closure of {x, y} under conjunction, disjunction and negation, plus a
/// sweep of the Boolean-algebra axioms over it: a common unit (1|β) and zero
/// (0|β) with unit ≠ zero, identity and complement laws for every member,
/// and both distributive laws for every triple. Throws TooLarge for spaces
/// of more than 6 atoms.
Subalgebra generated_subalgebra(const Conditional& x, const Conditional& y);

}  // namespace boolfrac
