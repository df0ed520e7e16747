#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabiliscope/fiber_model.hpp"
#include "stabiliscope/pl_map.hpp"
#include "stabiliscope/rational.hpp"

namespace stabiliscope {

// A destabilising orbit: curve `start_curve` is contracted to the point of
// gap points[0], whose forward orbit stays a single point through
// points[1..] and then becomes indeterminate, sweeping the marked curves
// [inverse_first, inverse_last]. Gap/curve indices refer to the model the
// orbit was detected on. `minimal` marks orbits of minimum length among
// those detected together.
struct DestabOrbit {
  std::size_t start_curve = 0;
  std::vector<std::size_t> points;
  std::size_t inverse_first = 0;
  std::size_t inverse_last = 0;
  bool minimal = false;

  std::size_t length() const { return points.size(); }

  friend bool operator==(const DestabOrbit&, const DestabOrbit&) = default;
};

// Same orbit with indices resolved to values, so it stays meaningful after
// the model has been refined.
struct ResolvedOrbit {
  Rat start;
  std::vector<std::pair<Rat, Rat>> points;  // (gap_lo, gap_hi) per step
  std::vector<Rat> inverse;
  bool minimal = false;

  friend bool operator==(const ResolvedOrbit&, const ResolvedOrbit&) = default;
};

ResolvedOrbit resolve(const DestabOrbit& orbit, const FiberModel& model);

// Optional instrumentation: how many transfer evaluations (curve or gap)
// one search performed. Bounded by curves * (gaps + 1), which is what makes
// stability of a fixed model decidable.
struct OrbitSearchStats {
  std::size_t transfer_evals = 0;
};

// All destabilising orbits of the pair, one per distinct initial gap,
// ordered by start curve. Two contracted curves landing in the same gap
// share one orbit record (smallest curve index wins).
std::vector<DestabOrbit> find_destabilizing_orbits(const FiberModel& model,
                                                   const PLMap& map,
                                                   OrbitSearchStats* stats = nullptr);

struct StabilityVerdict {
  bool stable = true;
  std::optional<DestabOrbit> orbit;  // a minimal witness when unstable
};

// Stable iff no destabilising orbit exists. When unstable the verdict
// carries a minimal orbit (shortest; smallest start curve on ties).
StabilityVerdict is_algebraically_stable(const FiberModel& model, const PLMap& map);

// How a round chooses among the minimal (shortest) orbits.
enum class TieBreak { SmallestStart, LargestStart, SeededRandom };

struct Strategy {
  TieBreak rule = TieBreak::SmallestStart;
  std::uint64_t seed = 0;

  static Strategy smallest_start() { return {TieBreak::SmallestStart, 0}; }
  static Strategy largest_start() { return {TieBreak::LargestStart, 0}; }
  static Strategy seeded_random(std::uint64_t seed) { return {TieBreak::SeededRandom, seed}; }

  // "smallest-start", "largest-start", "random"; anything else throws
  // std::invalid_argument.
  static Strategy parse(const std::string& name, std::uint64_t seed = 0);

  std::string name() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// One blowup round: pick a minimal destabilising orbit per the strategy and
// blow up every gap it visits (mediant insertions, processed in decreasing
// gap order so indices stay valid). Calling this on a stable pair throws
// std::logic_error.
FiberModel msa_step(const FiberModel& model, const PLMap& map,
                    const Strategy& strategy = Strategy::smallest_start());

struct MsaRound {
  ResolvedOrbit orbit;        // the orbit blown up, resolved pre-blowup
  std::vector<Rat> inserted;  // mediants added this round
};

struct MsaResult {
  enum class Status { Terminated, BudgetExhausted };

  Status status = Status::Terminated;
  FiberModel final_model;
  std::size_t rounds = 0;  // blowup rounds performed
  std::vector<MsaRound> trace;

  bool terminated() const { return status == Status::Terminated; }
};

// Iterate msa_step until the pair is stable or the budget runs out. The
// budget counts stability checks: a run makes at most `budget` checks with
// one blowup round between consecutive checks, so an exhausted run performs
// budget - 1 rounds (budget 0 exhausts immediately).
MsaResult run_msa(const FiberModel& model, const PLMap& map, std::size_t budget,
                  const Strategy& strategy = Strategy::smallest_start());

// Structural certificate that a tent-like map defeats stabilisation: slopes
// all +-3/2, a unique interior breakpoint folding onto 1, and the orbit of
// 1 marching through odd/2^m values — denominators that outgrow anything a
// mediant-insertion process can mark.
struct Certificate {
  bool slopes_ok = false;
  bool fold_ok = false;
  std::vector<Rat> orbit_prefix;
  bool denominators_doubling = false;
  std::size_t steps_checked = 0;

  bool valid() const { return slopes_ok && fold_ok && denominators_doubling; }
};

// Check the certificate conditions for `steps` orbit steps (steps >= 1,
// else std::invalid_argument).
Certificate verify_counterexample(const PLMap& map, std::size_t steps);

// Run the stabilisation under every strategy and compare the final marked
// sets; true iff they all agree. A strategy exhausting the budget throws
// inconclusive_result. Empty strategy list throws std::invalid_argument.
bool check_uniqueness(const FiberModel& model, const PLMap& map, std::size_t budget,
                      const std::vector<Strategy>& strategies);

}  // namespace stabiliscope
