#include <doctest.h>

#include <set>

#include "boolfrac/error.hpp"
#include "boolfrac/event.hpp"
#include "../support/die.hpp"

using namespace boolfrac;
using testing::ev;
using testing::set;
using testing::show;

TEST_CASE("die events combine as sets") {
  CHECK(show(ev("even") & ev("lt4")) == "{2}");
  CHECK(show(ev("even") | ev("lt5")) == "{1,2,3,4,6}");
  CHECK(show(~ev("even")) == "{1,3,5}");
  CHECK(show(~ev("lt5")) == "{5,6}");
  CHECK((ev("even") & ev("odd")).empty());
  CHECK((ev("even") | ev("odd")).is_universe());
  CHECK(leq(ev("two"), ev("even")));
  CHECK_FALSE(leq(ev("even"), ev("lt4")));
}

TEST_CASE("Boolean algebra identities hold for every pair of 4-atom events") {
  const SampleSpace s({"a", "b", "c", "d"});
  const auto all = enumerate_events(s);
  REQUIRE(all.size() == 16);
  for (const auto& x : all) {
    CHECK((x & s.universe()) == x);
    CHECK((x | s.none()) == x);
    CHECK(~~x == x);
    CHECK(leq(x, x));
    for (const auto& y : all) {
      CHECK(leq(x, y) == ((x & y) == x));
      CHECK(~(x & y) == (~x | ~y));
      CHECK((x | (x & y)) == x);
    }
  }
}

TEST_CASE("enumerate_events lists each subset once in ascending order") {
  const SampleSpace one({"a1"});
  const auto e1 = enumerate_events(one);
  REQUIRE(e1.size() == 2);
  CHECK(format_event(e1[0], one) == "{}");
  CHECK(format_event(e1[1], one) == "{a1}");

  const SampleSpace three({"x", "y", "z"});
  const auto e3 = enumerate_events(three);
  CHECK(e3.size() == 8);
  CHECK(std::set<Event>(e3.begin(), e3.end()).size() == 8);
  CHECK(std::is_sorted(e3.begin(), e3.end()));

  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("a" + std::to_string(i));
  CHECK_THROWS_AS(enumerate_events(SampleSpace(many)), Error);
}

TEST_CASE("formatting follows declaration order, not name order") {
  const SampleSpace s({"z", "a", "m"});
  const std::vector<std::string> names = {"m", "z"};
  CHECK(format_event(s.event(names), s) == "{z,m}");
}

TEST_CASE("sample space validation") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error");
    return ErrorKind::kParse;
  };
  CHECK(kind_of([] { SampleSpace({}); }) == ErrorKind::kInvalidSpace);
  CHECK(kind_of([] { SampleSpace({"a", "a"}); }) == ErrorKind::kDuplicateName);
  CHECK(kind_of([] { SampleSpace({"a b"}); }) == ErrorKind::kInvalidSpace);

  std::vector<std::string> sixty_five;
  for (int i = 0; i < 65; ++i) sixty_five.push_back("w" + std::to_string(i));
  CHECK(kind_of([&] { SampleSpace{sixty_five}; }) == ErrorKind::kTooLarge);
  sixty_five.pop_back();
  const SampleSpace wide(sixty_five);
  CHECK(wide.universe().count() == 64);
  CHECK((~wide.universe()).empty());

  const SampleSpace s({"a", "b"});
  CHECK(kind_of([&] { (void)s.event(0b100); }) == ErrorKind::kInvalidEvent);
  const std::vector<std::string> bad = {"c"};
  CHECK(kind_of([&] { (void)s.event(bad); }) == ErrorKind::kUnknownAtom);
}

TEST_CASE("events from different spaces do not mix") {
  const SampleSpace s({"a", "b"});
  const SampleSpace t({"a", "b"});
  CHECK(s.universe() != t.universe());
  CHECK_THROWS_AS((void)(s.universe() & t.universe()), Error);
  const SampleSpace copy = s;
  CHECK(copy.universe() == s.universe());
}
