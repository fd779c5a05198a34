#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "nanoword/lift.hpp"
#include "nanoword/search.hpp"

using namespace nanoword;
using testing::uniform;

TEST_CASE("AA reduces to the empty word in one step") {
  auto m = MoveSystem::homotopy(testing::one_symbol(), {{0, 0, 0}});
  auto aa = uniform(m.alphabet_ptr(), "A A", "a");
  auto empty = uniform(m.alphabet_ptr(), "", "a");
  auto v = equivalent(aa, empty, m);
  REQUIRE(v.outcome == Outcome::Equivalent);
  CHECK(v.path.size() == 1);
  CHECK(replay_path(canonical_form(aa), canonical_form(empty), v.path, m));
  CHECK(format_path(v.path, m.alphabet()) == "1 M1 A -> ;\n");
}

TEST_CASE("ABAB is trivial over a fixed symbol") {
  auto m = MoveSystem::homotopy(testing::one_symbol(), {{0, 0, 0}});
  auto abab = uniform(m.alphabet_ptr(), "A B A B", "a");
  auto empty = uniform(m.alphabet_ptr(), "", "a");
  auto v = equivalent(abab, empty, m, {8, 200000, 1});
  REQUIRE(v.outcome == Outcome::Equivalent);
  CHECK(replay_path(canonical_form(abab), canonical_form(empty), v.path, m));
}

TEST_CASE("ABAB over the curves data is not trivial within budget") {
  auto data = builtin_data("curves", 1);
  auto abab = uniform(data.base(), "A B A B", "a");
  auto empty = uniform(data.base(), "", "a");
  auto v = equivalent(abab, empty, data.base_system, {6, 20000, 1});
  CHECK(v.outcome != Outcome::Equivalent);
}

TEST_CASE("identical inputs are equivalent with an empty path") {
  auto m = MoveSystem::homotopy(testing::one_symbol(), {{0, 0, 0}});
  auto p = uniform(m.alphabet_ptr(), "A B B A", "a");
  auto v = equivalent(p, p, m);
  CHECK(v.outcome == Outcome::Equivalent);
  CHECK(v.path.empty());
}

TEST_CASE("different component counts are never equivalent") {
  auto m = MoveSystem::homotopy(testing::one_symbol(), {{0, 0, 0}});
  auto a = uniform(m.alphabet_ptr(), "", "a");
  auto b = uniform(m.alphabet_ptr(), "|", "a");
  CHECK(equivalent(a, b, m).outcome == Outcome::NotEquivalent);
}

TEST_CASE("closed search space yields NotEquivalent") {
  // No moves at all: every phrase is alone in its class.
  auto alpha = testing::one_symbol();
  MoveSystem none(alpha, {}, {}, {});
  auto a = uniform(alpha, "A A", "a");
  auto b = uniform(alpha, "", "a");
  auto v = equivalent(a, b, none, {4, 1000, 1});
  CHECK(v.outcome == Outcome::NotEquivalent);
}

TEST_CASE("budget exhaustion yields Unknown") {
  auto data = builtin_data("curves", 1);
  auto abab = uniform(data.base(), "A B A B", "a");
  auto empty = uniform(data.base(), "", "a");
  auto v = equivalent(abab, empty, data.base_system, {8, 50, 1});
  CHECK(v.outcome == Outcome::Unknown);
}

TEST_CASE("search is deterministic across thread counts") {
  auto m = MoveSystem::homotopy(testing::one_symbol(), {{0, 0, 0}});
  auto a = uniform(m.alphabet_ptr(), "A B C A B C", "a");
  auto b = uniform(m.alphabet_ptr(), "B A A C C B", "a");
  auto one = equivalent(a, b, m, {7, 200000, 1});
  auto four = equivalent(a, b, m, {7, 200000, 4});
  REQUIRE(one.outcome == Outcome::Equivalent);
  CHECK(four.outcome == one.outcome);
  CHECK(four.states == one.states);
  CHECK(format_path(four.path, m.alphabet()) == format_path(one.path, m.alphabet()));
}

TEST_CASE("replay rejects a broken path") {
  auto m = MoveSystem::homotopy(testing::one_symbol(), {{0, 0, 0}});
  auto aa = uniform(m.alphabet_ptr(), "A A", "a");
  auto empty = uniform(m.alphabet_ptr(), "", "a");
  auto abba = uniform(m.alphabet_ptr(), "A B B A", "a");
  auto v = equivalent(aa, empty, m);
  REQUIRE(v.outcome == Outcome::Equivalent);
  CHECK_FALSE(replay_path(canonical_form(abba), canonical_form(empty), v.path, m));
  CHECK_FALSE(replay_path(canonical_form(aa), canonical_form(abba), v.path, m));
}

TEST_CASE("reachable sets record paths") {
  auto m = MoveSystem::homotopy(testing::one_symbol(), {{0, 0, 0}});
  auto start = canonical_form(uniform(m.alphabet_ptr(), "A A B B", "a"));
  auto r = ReachableSet::explore(start, m, {3, 100000, 1});
  CHECK(r.closed());
  auto target = canonical_form(uniform(m.alphabet_ptr(), "A B C C B A", "a"));
  REQUIRE(r.contains(target));
  auto path = r.path_to(target);
  REQUIRE(path);
  CHECK(replay_path(start, target, *path, m));
}
