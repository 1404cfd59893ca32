#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "boolfrac/conditional.hpp"

namespace boolfrac {

/// Three-valued outcome of a conditional at an atom. U means the condition
/// is false there, so the conditional is inapplicable.
enum class TruthValue : unsigned char { kTrue, kFalse, kUndefined };

inline constexpr std::array<TruthValue, 3> kTruthValues = {
    TruthValue::kTrue, TruthValue::kFalse, TruthValue::kUndefined};

char to_char(TruthValue v);

/// T on the consequent, F on condition minus consequent, U off the
/// condition. Throws UnknownAtom for an index outside the space.
TruthValue eval_at(const Conditional& c, std::size_t atom);

// The four truth tables. The first operand selects the row, the second the
// column.
TruthValue tt_and(TruthValue p, TruthValue q);
TruthValue tt_or(TruthValue p, TruthValue q);
TruthValue tt_given(TruthValue p, TruthValue q);
TruthValue tt_not(TruthValue p);

}  // namespace boolfrac
