#include <doctest.h>

#include <set>

#include "boolfrac/error.hpp"
#include "boolfrac/lawcheck.hpp"
#include "boolfrac/relations.hpp"
#include "../support/die.hpp"
#include "../support/oracle.hpp"

using namespace boolfrac;
using testing::c;
using testing::ev;
using testing::set;
using testing::show;

namespace {

const Conditional kTwoEven = testing::c("two|even");
const Conditional kLt4Lt5 = testing::c("lt4|lt5");

// Pointwise readings of the relations: "whenever x is ..., y is ...".
template <class Pred>
bool everywhere(const oracle::Truth& x, const oracle::Truth& y, Pred pred) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!pred(x[i], y[i])) return false;
  }
  return true;
}

bool model_holds(Relation rel, const oracle::Truth& x, const oracle::Truth& y) {
  const auto tr = [](char p, char q) { return p != 'T' || q == 'T'; };
  const auto nf = [](char p, char q) { return q != 'F' || p == 'F'; };
  const auto ap = [](char p, char q) { return p == 'U' || q != 'U'; };
  const auto same_ap = [](char p, char q) { return (p == 'U') == (q == 'U'); };
  const auto rev_ap = [](char p, char q) { return q == 'U' || p != 'U'; };
  switch (rel) {
    case Relation::kTr: return everywhere(x, y, tr);
    case Relation::kNf: return everywhere(x, y, nf);
    case Relation::kAp: return everywhere(x, y, ap);
    case Relation::kPm: return everywhere(x, y, tr) && everywhere(x, y, nf);
    case Relation::kVee: return everywhere(x, y, ap) && everywhere(x, y, tr);
    case Relation::kWedge: return everywhere(x, y, rev_ap) && everywhere(x, y, nf);
    case Relation::kBo: return everywhere(x, y, same_ap) && everywhere(x, y, tr);
  }
  return false;
}

}  // namespace

TEST_CASE("relation tags round trip") {
  for (Relation r : {Relation::kTr, Relation::kNf, Relation::kAp, Relation::kPm, Relation::kVee, Relation::kWedge,
                     Relation::kBo}) {
    CHECK(parse_relation(to_string(r)) == r);
  }
  CHECK_FALSE(parse_relation("orth").has_value());
}

TEST_CASE("die examples") {
  CHECK(holds(Relation::kTr, kTwoEven, kLt4Lt5));
  CHECK_FALSE(holds(Relation::kAp, kTwoEven, kLt4Lt5));

  CHECK(orthogonal(kTwoEven, c("{4}|{2,4,5}")));
  CHECK(orthogonal(kTwoEven, negation(kTwoEven)));
  CHECK_FALSE(orthogonal(kTwoEven, c("{1,3}|lt5")));

  CHECK(show(ortho_family_member(kTwoEven, testing::die().space().universe(), set({"4", "5"}))) == "({4}|{2,4,5})");
  CHECK(ortho_family_member(kTwoEven, set({}), set({})) == zero(kTwoEven.consequent()));

  CHECK(sim_verifiable(kTwoEven, c("even")));
  CHECK_FALSE(sim_verifiable(kTwoEven, kLt4Lt5));
  CHECK_FALSE(sim_falsifiable(kTwoEven, c("even")));
  CHECK(sim_falsifiable(kTwoEven, negation(kTwoEven)));

  CHECK(compatible(kTwoEven, negation(kTwoEven)));
  CHECK_FALSE(compatible(kTwoEven, kLt4Lt5));
  const Conditional u = undefined(testing::die().space());
  CHECK(compatible(u, u));
  CHECK_FALSE(in_common_subalgebra(u, u));
}

TEST_CASE("profiles") {
  const VerifiabilityProfile p = profile(kTwoEven, kLt4Lt5);
  CHECK(p.flags == std::array<bool, 7>{true, false, false, false, false, false, false});
  CHECK(profile(kTwoEven, kTwoEven).flags == std::array<bool, 7>{true, true, true, true, true, true, true});
  CHECK(profile(kTwoEven, c("even|even")).flag(7));
}

TEST_CASE("profile invariants over 3 atoms") {
  const SampleSpace s({"1", "2", "3"});
  const auto all = enumerate_conditionals(s);
  for (const auto& x : all) {
    for (const auto& y : all) {
      const VerifiabilityProfile p = profile(x, y);
      const VerifiabilityProfile q = profile(y, x);
      CHECK(p.flag(3) == (p.flag(1) && q.flag(1)));
      CHECK(p.flag(3) == sim_verifiable(x, y));
      CHECK(p.flag(4) == sim_falsifiable(x, y));
      CHECK(p.flag(6) == (p.flag(1) && p.flag(2)));
      CHECK(p.flag(6) == leq(x.condition(), y.condition()));
      CHECK(p.flag(7) == (p.flag(3) && p.flag(4)));
      if (p.flag(7)) CHECK(p.flags == std::array<bool, 7>{true, true, true, true, true, true, true});
    }
  }
}

TEST_CASE("relations match their pointwise readings") {
  const SampleSpace s({"1", "2", "3"});
  const auto truths = oracle::all_truths(3);
  for (const auto& tx : truths) {
    const Conditional x = oracle::from_truth(s, tx);
    for (const auto& ty : truths) {
      const Conditional y = oracle::from_truth(s, ty);
      for (Relation r : {Relation::kTr, Relation::kNf, Relation::kAp, Relation::kPm, Relation::kVee,
                         Relation::kWedge, Relation::kBo}) {
        CAPTURE(to_string(r));
        CHECK(holds(r, x, y) == model_holds(r, tx, ty));
      }
      // Orthogonal: the truth of either forces the falsity of the other.
      CHECK(orthogonal(x, y) == everywhere(tx, ty, [](char p, char q) {
              return (p != 'T' || q == 'F') && (q != 'T' || p == 'F');
            }));
      // Simultaneously verifiable: the truth of either makes the other applicable.
      CHECK(sim_verifiable(x, y) == everywhere(tx, ty, [](char p, char q) {
              return (p != 'T' || q != 'U') && (q != 'T' || p != 'U');
            }));
      CHECK(sim_falsifiable(x, y) == everywhere(tx, ty, [](char p, char q) {
              return (p != 'F' || q != 'U') && (q != 'F' || p != 'U');
            }));
      CHECK(holds(Relation::kWedge, x, y) == (conjunction(x, y) == x));
    }
  }
}

TEST_CASE("pm is a partial order on normal forms") {
  const SampleSpace s({"1", "2", "3"});
  const auto all = enumerate_conditionals(s);
  for (const auto& x : all) {
    CHECK(holds(Relation::kPm, x, x));
    for (const auto& y : all) {
      const bool xy = holds(Relation::kPm, x, y);
      if (xy && holds(Relation::kPm, y, x)) CHECK(x == y);
      if (!xy) continue;
      for (const auto& z : all) {
        if (holds(Relation::kPm, y, z)) CHECK(holds(Relation::kPm, x, z));
      }
    }
  }
}

TEST_CASE("generated subalgebras") {
  const Subalgebra same = generated_subalgebra(kTwoEven, c("{4}|even"));
  CHECK(same.is_boolean);
  for (const auto& m : same.members) CHECK(m.condition() == ev("even"));
  CHECK(std::is_sorted(same.members.begin(), same.members.end()));

  CHECK_FALSE(generated_subalgebra(kTwoEven, kLt4Lt5).is_boolean);
  CHECK_FALSE(generated_subalgebra(kTwoEven, undefined(testing::die().space())).is_boolean);

  const SampleSpace s({"1", "2", "3"});
  const auto all = enumerate_conditionals(s);
  const Subalgebra u = generated_subalgebra(all.front(), all.front());
  CHECK_FALSE(u.is_boolean);
}

TEST_CASE("subalgebra closure is bounded") {
  std::vector<std::string> atoms;
  for (int i = 0; i < 7; ++i) atoms.push_back("a" + std::to_string(i));
  const SampleSpace big(atoms);
  CHECK_THROWS_AS(generated_subalgebra(plain(big.universe()), plain(big.none())), Error);
}
