#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "stabiliscope/graph_lift.hpp"
#include "support/generators.hpp"

using namespace stabiliscope;

TEST_CASE("lifting absorbs length-1 orbits and shortens the rest") {
  const LiftState s(5, {1, 2, 3}, 1);
  const LiftState next = lift(s);
  CHECK(next.comp() == 4);
  CHECK(next.orbit_lengths() == std::multiset<std::size_t>{1, 2});
  CHECK(next.length1_curves() == 1);
}

TEST_CASE("lifting without length-1 orbits keeps every curve class") {
  const LiftState next = lift(LiftState(2, {3}, 0));
  CHECK(next.comp() == 2);
  CHECK(next.orbit_lengths() == std::multiset<std::size_t>{2});
  CHECK(next.length1_curves() == 0);
}

TEST_CASE("absorbing the final orbits reaches a stable state") {
  const LiftState next = lift(LiftState(3, {1, 1, 1}, 3));
  CHECK(next.comp() == 0);
  CHECK(next.stable());
  CHECK(next.length1_curves() == 0);
}

TEST_CASE("states validate their invariants") {
  CHECK_THROWS_AS(LiftState(0, {1}, 0), std::invalid_argument);   // orbits, no curves
  CHECK_THROWS_AS(LiftState(1, {1, 1}, 2), std::invalid_argument);  // carriers > comp
  CHECK_THROWS_AS(LiftState(5, {2, 3}, 1), std::invalid_argument);  // carriers > ones
  CHECK_THROWS_AS(LiftState(2, {0, 1}, 1), std::invalid_argument);  // zero length
  CHECK_NOTHROW(LiftState(0, {}, 0));
}

TEST_CASE("a lift that strands orbits without curves is refused") {
  CHECK_THROWS_AS(lift(LiftState(1, {1, 2}, 1)), std::domain_error);
}

TEST_CASE("lift counts for the reference states") {
  CHECK(lifts_to_stability(LiftState(5, {1, 2, 3}, 1)) == 3);
  CHECK(lifts_to_stability(LiftState(4, {7}, 0)) == 7);
  CHECK(lifts_to_stability(LiftState(0, {}, 0)) == 0);
}

TEST_CASE("policies are pluggable") {
  // Model every new length-1 orbit as sharing a single carrier curve.
  const CurvePolicy shared = [](std::size_t comp, const std::multiset<std::size_t>& lengths) {
    return std::min<std::size_t>(comp, lengths.count(1) > 0 ? 1 : 0);
  };
  const LiftState next = lift(LiftState(5, {2, 2}, 0), shared);
  CHECK(next.orbit_lengths() == std::multiset<std::size_t>{1, 1});
  CHECK(next.length1_curves() == 1);
  CHECK(lifts_to_stability(LiftState(5, {2, 2}, 0), shared) == 2);
}

TEST_CASE("lift trajectories obey the termination bound and dichotomy") {
  std::mt19937_64 rng(503);
  for (int trial = 0; trial < 2000; ++trial) {
    const LiftState start = testsupport::random_lift_state(rng, 12);
    const std::size_t bound = *start.orbit_lengths().rbegin();
    CHECK(lifts_to_stability(start) <= bound);

    LiftState cur = start;
    std::size_t steps = 0;
    while (!cur.stable()) {
      const bool had_ones = cur.orbit_lengths().count(1) > 0;
      const std::size_t comp_before = cur.comp();
      const std::size_t carriers = cur.length1_curves();
      const std::multiset<std::size_t> before = cur.orbit_lengths();
      cur = lift(cur);
      ++steps;
      REQUIRE(steps <= bound);

      // comp drops exactly when length-1 orbits are absorbed, and then by
      // their carrier count.
      if (had_ones) {
        CHECK(carriers > 0);
        CHECK(cur.comp() == comp_before - carriers);
        CHECK(cur.orbit_lengths().size() == before.size() - before.count(1));
      } else {
        CHECK(cur.comp() == comp_before);
        CHECK(cur.orbit_lengths().size() == before.size());
      }
      // Every surviving orbit is one shorter than some orbit it came from.
      std::multiset<std::size_t> expected;
      for (const std::size_t n : before)
        if (n > 1) expected.insert(n - 1);
      CHECK(cur.orbit_lengths() == expected);
    }
    CHECK(steps == bound);  // the longest orbit shrinks by exactly one per lift
  }
}
