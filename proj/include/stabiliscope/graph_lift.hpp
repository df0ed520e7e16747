#pragma once

#include <cstddef>
#include <functional>
#include <set>

namespace stabiliscope {

// Abstract state of the lifting argument: `comp` independent curve classes,
// the multiset of destabilising-orbit lengths, and how many distinct curves
// start a length-1 orbit. Stable means no orbits remain.
class LiftState {
public:
  LiftState(std::size_t comp, std::multiset<std::size_t> orbit_lengths,
            std::size_t length1_curves);

  std::size_t comp() const { return comp_; }
  const std::multiset<std::size_t>& orbit_lengths() const { return orbit_lengths_; }
  std::size_t length1_curves() const { return length1_curves_; }

  bool stable() const { return orbit_lengths_.empty(); }

  friend bool operator==(const LiftState&, const LiftState&) = default;

private:
  std::size_t comp_ = 0;
  std::multiset<std::size_t> orbit_lengths_;
  std::size_t length1_curves_ = 0;
};

// After a lift the orbits that shrank to length 1 need a count of distinct
// carrier curves, which the abstract state cannot derive; a policy supplies
// it from the post-lift data. The default assumes distinct carriers: as
// many curves as new length-1 orbits, capped by the curves available.
using CurvePolicy =
    std::function<std::size_t(std::size_t comp, const std::multiset<std::size_t>& lengths)>;

std::size_t distinct_curve_policy(std::size_t comp, const std::multiset<std::size_t>& lengths);

// One lift. Without length-1 orbits every orbit length drops by one and
// comp is unchanged; with them, each length-1 orbit is absorbed (its curves
// leave the picture: comp -= length1_curves) and the remaining lengths drop
// by one. A lift that would consume the last curve classes while orbits
// remain is outside the modelled regime and throws std::domain_error.
LiftState lift(const LiftState& state, const CurvePolicy& policy = distinct_curve_policy);

// Number of lifts until stable; always at most max(orbit_lengths), since
// every lift shortens the longest orbit by one.
std::size_t lifts_to_stability(const LiftState& state,
                               const CurvePolicy& policy = distinct_curve_policy);

}  // namespace stabiliscope
