#include "boolfrac/schay.hpp"

#include <stdexcept>

#include "boolfrac/error.hpp"

namespace boolfrac::schay {

Conditional cap(const Conditional& x, const Conditional& y) {
  return Conditional::make(x.consequent() & y.consequent(), x.condition() & y.condition());
}

Conditional cup(const Conditional& x, const Conditional& y) {
  return Conditional::make(x.consequent() | y.consequent(), x.condition() | y.condition());
}

Conditional wedge(const Conditional& x, const Conditional& y) {
  const Event& a = x.consequent();
  const Event& b = x.condition();
  const Event& c = y.consequent();
  const Event& d = y.condition();
  const Event all_four = a & b & c & d;
  const Event first_only = a & b & ~d;
  const Event second_only = ~b & c & d;
  return Conditional::make(all_four | first_only | second_only, b | d);
}

Conditional vee(const Conditional& x, const Conditional& y) {
  return Conditional::make(x.consequent() | y.consequent(), x.condition() & y.condition());
}

Conditional tilde(const Conditional& x) {
  return Conditional::make(~x.consequent(), x.condition());
}

Conditional iteration_example(const Event& a, const Event& b) {
  if (!(a & b).empty()) throw Error(ErrorKind::kNotDisjoint, "A and B must be disjoint");
  const Conditional result = given(Conditional::make(b, a | b), plain(~b));
  // The inner conditioning collapses to (B | A ∩ B'), which is (0|A).
  if (result != Conditional::make(empty_of(a), a)) {
    throw std::logic_error("iterated conditioning did not reduce to (0|A)");
  }
  return result;
}

}  // namespace boolfrac::schay
