#include "boolfrac/conditional.hpp"

namespace boolfrac {

Conditional Conditional::make(const Event& consequent, const Event& condition) {
  return Conditional(meet(consequent, condition), condition);
}

Conditional plain(const Event& e) { return Conditional::make(e, universe_of(e)); }

Conditional unit(const Event& condition) { return Conditional::make(condition, condition); }

Conditional zero(const Event& condition) { return Conditional::make(empty_of(condition), condition); }

Conditional undefined(const SampleSpace& space) { return Conditional::make(space.none(), space.none()); }

Conditional negation(const Conditional& c) {
  return Conditional::make(complement(c.consequent()), c.condition());
}

Conditional disjunction(const Conditional& x, const Conditional& y) {
  const Event& ab = x.consequent();
  const Event& b = x.condition();
  const Event& cd = y.consequent();
  const Event& d = y.condition();
  return Conditional::make(ab | cd, b | d);
}

Conditional conjunction(const Conditional& x, const Conditional& y) {
  const Event& ab = x.consequent();
  const Event& b = x.condition();
  const Event& cd = y.consequent();
  const Event& d = y.condition();
#ifdef BOOLFRAC_MUTANT_DROP_ABD_TERM
  // Mutation-testing build only: the lawcheck suite must notice this.
  return Conditional::make((ab & cd) | (~b & cd), b | d);
#else
  return Conditional::make((ab & ~d) | (ab & cd) | (~b & cd), b | d);
#endif
}

Conditional given(const Conditional& inner, const Conditional& cond) {
  require_same_space(inner.condition(), cond.condition());
  // cd ∨ d' is c ∨ d', so the stored normal form of `cond` suffices.
  const Event applicable = cond.consequent() | ~cond.condition();
  return Conditional::make(inner.consequent(), inner.condition() & applicable);
}

Conditional osum(const Conditional& x, const Conditional& y) {
  const Event& ab = x.consequent();
  const Event& b = x.condition();
  const Event& cd = y.consequent();
  const Event& d = y.condition();
  return Conditional::make((ab & y.falsity()) | (x.falsity() & cd), b | d);
}

Conditional sasaki(const Conditional& b, const Conditional& a) {
  const Event& a1a2 = a.consequent();
  const Event& b1b2 = b.consequent();
  const Event& b2 = b.condition();
  return Conditional::make(a1a2 & (~b2 | b1b2), a.condition() | b2);
}

}  // namespace boolfrac
