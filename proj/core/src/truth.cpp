#include "boolfrac/truth.hpp"

#include "boolfrac/error.hpp"

namespace boolfrac {

namespace {

constexpr TruthValue T = TruthValue::kTrue;
constexpr TruthValue F = TruthValue::kFalse;
constexpr TruthValue U = TruthValue::kUndefined;

using Table = std::array<std::array<TruthValue, 3>, 3>;

// Rows and columns ordered T, F, U.
constexpr Table kAnd = {{{T, F, T}, {F, F, F}, {T, F, U}}};
constexpr Table kOr = {{{T, T, T}, {T, F, F}, {T, F, U}}};
constexpr Table kGiven = {{{T, U, T}, {F, U, F}, {U, U, U}}};
constexpr std::array<TruthValue, 3> kNot = {F, T, U};

constexpr std::size_t idx(TruthValue v) { return static_cast<std::size_t>(v); }

}  // namespace

char to_char(TruthValue v) {
  switch (v) {
    case TruthValue::kTrue: return 'T';
    case TruthValue::kFalse: return 'F';
    case TruthValue::kUndefined: return 'U';
  }
  return '?';
}

TruthValue eval_at(const Conditional& c, std::size_t atom) {
  if (atom >= c.condition().space_size()) {
    throw Error(ErrorKind::kUnknownAtom, "atom index " + std::to_string(atom) + " is outside the space");
  }
  if (c.consequent().contains(atom)) return T;
  if (c.condition().contains(atom)) return F;
  return U;
}

TruthValue tt_and(TruthValue p, TruthValue q) { return kAnd[idx(p)][idx(q)]; }
TruthValue tt_or(TruthValue p, TruthValue q) { return kOr[idx(p)][idx(q)]; }
TruthValue tt_given(TruthValue p, TruthValue q) { return kGiven[idx(p)][idx(q)]; }
TruthValue tt_not(TruthValue p) { return kNot[idx(p)]; }

}  // namespace boolfrac
