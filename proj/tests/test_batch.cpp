#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "stabiliscope/batch.hpp"
#include "support/generators.hpp"

using namespace stabiliscope;

TEST_CASE("bulk evaluation agrees with the serial kernel and the map") {
  std::mt19937_64 rng(701);
  for (int trial = 0; trial < 30; ++trial) {
    const PLMap map = testsupport::random_plmap(rng);
    std::vector<Rat> qs;
    for (int i = 0; i < 200; ++i) qs.push_back(testsupport::sb_walk(rng, 7));
    qs.push_back(Rat(0));
    qs.push_back(Rat(1));

    const std::vector<Rat> par = batch::eval_many(map, qs);
    const std::vector<Rat> ser = batch::eval_many_serial(map, qs);
    REQUIRE(par.size() == qs.size());
    CHECK(par == ser);
    for (std::size_t i = 0; i < qs.size(); ++i) CHECK(par[i] == map(qs[i]));
  }
}

TEST_CASE("bulk stability analysis agrees with the serial kernel") {
  std::mt19937_64 rng(709);
  std::vector<batch::Instance> instances;
  for (int i = 0; i < 120; ++i)
    instances.push_back({testsupport::random_model(rng, 6), testsupport::random_plmap(rng)});

  const std::vector<StabilityVerdict> par = batch::analyze_many(instances);
  const std::vector<StabilityVerdict> ser = batch::analyze_many_serial(instances);
  REQUIRE(par.size() == instances.size());

  bool unstable_seen = false;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    CHECK(par[i].stable == ser[i].stable);
    CHECK(par[i].orbit == ser[i].orbit);
    const StabilityVerdict direct =
        is_algebraically_stable(instances[i].model, instances[i].map);
    CHECK(par[i].stable == direct.stable);
    CHECK(par[i].orbit == direct.orbit);
    unstable_seen = unstable_seen || !par[i].stable;
  }
  CHECK(unstable_seen);  // the sample exercises both verdicts
}

TEST_CASE("bulk lift counts agree with the serial kernel and the trajectory") {
  std::mt19937_64 rng(719);
  std::vector<LiftState> states;
  for (int i = 0; i < 500; ++i) states.push_back(testsupport::random_lift_state(rng, 12));

  const std::vector<std::size_t> par = batch::lift_counts(states);
  const std::vector<std::size_t> ser = batch::lift_counts_serial(states);
  REQUIRE(par.size() == states.size());
  CHECK(par == ser);
  for (std::size_t i = 0; i < states.size(); ++i)
    CHECK(par[i] == lifts_to_stability(states[i]));
}

TEST_CASE("empty batches are fine") {
  const PLMap map = build_tf({2, {{4, -3}, {0, 3}}});
  CHECK(batch::eval_many(map, {}).empty());
  CHECK(batch::analyze_many({}).empty());
  CHECK(batch::lift_counts({}).empty());
}
