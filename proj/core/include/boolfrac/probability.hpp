#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boolfrac/conditional.hpp"

namespace boolfrac {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", always with an explicit denominator.
std::string format_rational(const Rational& r);
/// Decimal rendering rounded half-up to `digits` places.
std::string format_decimal(const Rational& r, int digits = 6);

/// Nonnegative exact weight per atom with positive total.
class Measure {
 public:
  /// Throws BadWeight for a negative weight or a count that differs from
  /// the atom count, ZeroTotalWeight when all weights are zero.
  Measure(const SampleSpace& space, std::vector<Rational> weights);

  static Measure uniform(const SampleSpace& space);

  std::uint32_t space_id() const noexcept { return space_id_; }
  std::span<const Rational> weights() const noexcept { return weights_; }
  const Rational& total() const noexcept { return total_; }
  /// Sum of the member weights. Throws SpaceMismatch.
  Rational weight(const Event& e) const;

 private:
  std::uint32_t space_id_;
  std::vector<Rational> weights_;
  Rational total_;
};

/// An exact probability, reduced, in [0,1].
class Probability {
 public:
  explicit Probability(Rational value);

  const Rational& value() const noexcept { return value_; }
  std::string str() const { return format_rational(value_); }

  friend bool operator==(const Probability&, const Probability&) = default;

 private:
  Rational value_;
};

Probability p_event(const Measure& m, const Event& a);

/// w(consequent)/w(condition). Throws ZeroCondition when the condition has
/// weight zero, which includes U.
Probability p_cond(const Measure& m, const Conditional& c);

/// The three-term disjunction formula
///   P(a|b)P(b|b∨d) + P(c|d)P(d|b∨d) − P(abcd|bd)P(bd|b∨d)
/// with every factor kept. A conditional factor whose condition has weight
/// zero is left empty and its product counts as 0 (its partner factor is
/// then 0 as well).
struct OrFormula {
  std::optional<Rational> first;          // P(a|b)
  Rational first_weight;                  // P(b|b∨d)
  std::optional<Rational> second;         // P(c|d)
  Rational second_weight;                 // P(d|b∨d)
  std::optional<Rational> overlap;        // P(abcd|bd)
  Rational overlap_weight;                // P(bd|b∨d)
  Probability value{Rational(0)};
};

/// Throws ZeroCondition when w(b∨d) = 0.
OrFormula p_or_formula(const Measure& m, const Conditional& x, const Conditional& y);

enum class SuperpositionMode { kOr, kAnd };

/// Decomposition of the disjunction (or conjunction) over the three regions
/// bd', b'd and bd of b∨d:
///   P(a|bd')P(bd'|b∨d) + P(c|b'd)P(b'd|b∨d) + P(k·bd|b∨d)
/// where k is a∨c in or-mode and a∧c in and-mode. The first two products are
/// the probabilities of (a|b)(bd'|b∨d) and (c|d)(b'd|b∨d).
struct Superposition {
  std::optional<Rational> first;          // P(a|bd')
  Rational first_weight;                  // P(bd'|b∨d)
  std::optional<Rational> second;         // P(c|b'd)
  Rational second_weight;                 // P(b'd|b∨d)
  Rational overlap;                       // P(k·bd|b∨d)
  Probability value{Rational(0)};
};

/// Throws ZeroCondition when w(b∨d) = 0.
Superposition p_superposition(const Measure& m, const Conditional& x, const Conditional& y,
                              SuperpositionMode mode);

/// Σᵢ P(a|uᵢ)P(uᵢ|u) with u the join of the parts; zero-weight parts
/// contribute 0. Throws NotAPartition for overlapping parts, ZeroCondition
/// when w(u) = 0.
Probability partition_expansion(const Measure& m, const Event& a, std::span<const Event> parts);

struct AdditiveReport {
  Probability lhs{Rational(0)};  // P((A|C1) ∨ (B|C2))
  Rational rhs;                  // P(A|C1) + P(B|C2), may exceed 1
  bool holds = false;
  /// cases[i] is true when case i+1 is satisfied:
  ///   1) P(A|C1) = 0 = P(B|C2)
  ///   2) P(A|C1) = 0 and C1 ≤ C2 a.s.
  ///   3) P(B|C2) = 0 and C2 ≤ C1 a.s.
  ///   4) C1 = C2 a.s. and P(A∧B|C1) = 0
  std::array<bool, 4> cases{};

  bool any_case() const { return cases[0] || cases[1] || cases[2] || cases[3]; }
};

/// Additive-law analysis for (A|C1) ∨ (B|C2). Almost-sure comparisons are
/// relative to the measure: X ≤ Y a.s. iff w(XY') = 0. Throws ZeroCondition
/// unless both conditions have positive weight.
AdditiveReport additive_law_check(const Measure& m, const Event& a, const Event& c1, const Event& b,
                                  const Event& c2);

}  // namespace boolfrac
