#include <doctest.h>

#include "boolfrac/error.hpp"
#include "boolfrac/lawcheck.hpp"
#include "boolfrac/probability.hpp"
#include "../support/die.hpp"
#include "../support/oracle.hpp"

using namespace boolfrac;
using testing::c;
using testing::ev;
using testing::set;

namespace {

const Measure& uniform() { return *testing::die().find_measure("uniform"); }

std::string p(const Conditional& x) { return p_cond(uniform(), x).str(); }

std::string opt(const std::optional<Rational>& r) { return r ? format_rational(*r) : "none"; }

}  // namespace

TEST_CASE("formatting") {
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_decimal(Rational(2, 3)) == "0.666667");
  CHECK(format_decimal(Rational(1, 8), 2) == "0.13");
  CHECK(format_decimal(Rational(1)) == "1.000000");
}

TEST_CASE("event and conditional probabilities on the die") {
  CHECK(p_event(uniform(), ev("even")).str() == "1/2");
  CHECK(p_event(uniform(), set({})).str() == "0/1");
  CHECK(p_event(uniform(), testing::die().space().universe()).str() == "1/1");
  CHECK(p(c("two|even")) == "1/3");
  CHECK(p(c("lt4|lt5")) == "3/4");
  CHECK(p(c("(two|even) or (lt4|lt5)")) == "3/5");
  CHECK(p(c("(even|even) or (five|odd)")) == "2/3");
}

TEST_CASE("zero-probability condition is an error") {
  try {
    (void)p_cond(uniform(), c("two|{}"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kZeroCondition);
    CHECK(std::string(e.what()) == "undefined: condition has probability 0");
  }
}

TEST_CASE("measure validation") {
  const SampleSpace s({"a", "b"});
  auto kind_of = [&](std::vector<Rational> w) {
    try {
      Measure m(s, std::move(w));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParse;
  };
  CHECK(kind_of({Rational(1)}) == ErrorKind::kBadWeight);
  CHECK(kind_of({Rational(1), Rational(-1)}) == ErrorKind::kBadWeight);
  CHECK(kind_of({Rational(0), Rational(0)}) == ErrorKind::kZeroTotalWeight);
  CHECK_THROWS_AS(Probability(Rational(3, 2)), std::out_of_range);
}

TEST_CASE("disjunction formula on the die bet") {
  const OrFormula f = p_or_formula(uniform(), c("two|even"), c("lt4|lt5"));
  CHECK(opt(f.first) == "1/3");
  CHECK(format_rational(f.first_weight) == "3/5");
  CHECK(opt(f.second) == "3/4");
  CHECK(format_rational(f.second_weight) == "4/5");
  CHECK(opt(f.overlap) == "1/2");
  CHECK(format_rational(f.overlap_weight) == "2/5");
  CHECK(f.value.str() == "3/5");

  const OrFormula same = p_or_formula(uniform(), c("two|even"), c("two|even"));
  CHECK(same.value.str() == "1/3");
}

TEST_CASE("superposition and partition expansion on the die") {
  const Conditional x = c("two|even");
  const Conditional y = c("lt4|lt5");
  CHECK(p_superposition(uniform(), x, y, SuperpositionMode::kOr).value.str() == "3/5");
  CHECK(p_superposition(uniform(), x, x, SuperpositionMode::kAnd).value.str() == "1/3");

  const Event halves[] = {ev("even"), ev("odd")};
  CHECK(partition_expansion(uniform(), ev("lt4"), halves).str() == "1/2");
  const Event whole[] = {testing::die().space().universe()};
  CHECK(partition_expansion(uniform(), ev("lt4"), whole).str() == "1/2");
  const Event single[] = {ev("lt5")};
  CHECK(partition_expansion(uniform(), ev("lt4"), single).str() == "3/4");
  const Event overlapping[] = {ev("even"), ev("lt4")};
  CHECK_THROWS_AS(partition_expansion(uniform(), ev("lt4"), overlapping), Error);
}

TEST_CASE("additive law on the die") {
  const AdditiveReport r = additive_law_check(uniform(), set({"1"}), ev("odd"), set({"2"}), ev("even"));
  CHECK(r.lhs.str() == "1/3");
  CHECK(format_rational(r.rhs) == "2/3");
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.any_case());

  const AdditiveReport same = additive_law_check(uniform(), set({"1"}), ev("odd"), set({"3"}), ev("odd"));
  CHECK(same.lhs.str() == "2/3");
  CHECK(format_rational(same.rhs) == "2/3");
  CHECK(same.holds);
  CHECK(same.cases == std::array<bool, 4>{false, false, false, true});
}

// Direct counting with integer weights against the library on every pair of
// 3-atom conditionals and every weight vector in {0..2}^3.
TEST_CASE("probabilities match integer counting") {
  const SampleSpace s({"a", "b", "c"});
  const auto truths = oracle::all_truths(3);
  for (const auto& m : enumerate_measures(s, 2)) {
    std::vector<long long> w;
    for (const auto& r : m.weights()) w.push_back(static_cast<long long>(numerator(r)));
    for (const auto& tx : truths) {
      const Conditional x = oracle::from_truth(s, tx);
      const oracle::Frac expect = oracle::prob(w, tx);
      if (expect.den == 0) {
        CHECK_THROWS_AS(p_cond(m, x), Error);
        continue;
      }
      CHECK(p_cond(m, x).str() == expect.str());
      for (const auto& ty : truths) {
        const Conditional y = oracle::from_truth(s, ty);
        const oracle::Frac both = oracle::prob(w, oracle::pointwise(tx, ty, oracle::t_or));
        // x applies with positive weight, so x or y does too.
        CHECK(p_or_formula(m, x, y).value.str() == both.str());
        CHECK(p_superposition(m, x, y, SuperpositionMode::kOr).value.str() == both.str());
        CHECK(p_superposition(m, x, y, SuperpositionMode::kAnd).value.str() ==
              oracle::prob(w, oracle::pointwise(tx, ty, oracle::t_and)).str());
      }
    }
  }
}

TEST_CASE("additive law cases match direct counting") {
  const SampleSpace s({"a", "b", "c"});
  const auto events = enumerate_events(s);
  for (const auto& m : enumerate_measures(s, 2)) {
    std::vector<long long> w;
    for (const auto& r : m.weights()) w.push_back(static_cast<long long>(numerator(r)));
    const auto wt = [&](const Event& e) { return oracle::weight(w, e.bits()); };
    for (const auto& c1 : events) {
      if (wt(c1) == 0) continue;
      for (const auto& c2 : events) {
        if (wt(c2) == 0) continue;
        for (const auto& a : events) {
          for (const auto& b : events) {
            const AdditiveReport r = additive_law_check(m, a, c1, b, c2);
            // P(A|C1) + P(B|C2) as a single fraction.
            const long long num = wt(a & c1) * wt(c2) + wt(b & c2) * wt(c1);
            const long long den = wt(c1) * wt(c2);
            const long long lhs_num = wt((a & c1) | (b & c2));
            const long long lhs_den = wt(c1 | c2);
            CHECK(r.holds == (lhs_num * den == num * lhs_den));
            CHECK(r.cases[0] == (wt(a & c1) == 0 && wt(b & c2) == 0));
            CHECK(r.cases[3] == (wt(c1 & ~c2) == 0 && wt(c2 & ~c1) == 0 && wt(a & b & c1) == 0));
            CHECK(r.holds == r.any_case());
          }
        }
      }
    }
  }
}
