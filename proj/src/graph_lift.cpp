#include "stabiliscope/graph_lift.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stabiliscope {

LiftState::LiftState(std::size_t comp, std::multiset<std::size_t> orbit_lengths,
                     std::size_t length1_curves)
    : comp_(comp), orbit_lengths_(std::move(orbit_lengths)), length1_curves_(length1_curves) {
  if (orbit_lengths_.count(0) > 0)
    throw std::invalid_argument("lift state: orbit lengths must be positive");
  if (length1_curves_ > comp_)
    throw std::invalid_argument("lift state: more length-1 carrier curves than curves");
  if (length1_curves_ > orbit_lengths_.count(1))
    throw std::invalid_argument("lift state: more length-1 carrier curves than length-1 orbits");
  if (comp_ == 0 && !orbit_lengths_.empty())
    throw std::invalid_argument("lift state: orbits cannot survive without curves");
}

std::size_t distinct_curve_policy(std::size_t comp, const std::multiset<std::size_t>& lengths) {
  return std::min(comp, lengths.count(1));
}

LiftState lift(const LiftState& state, const CurvePolicy& policy) {
  const auto& lengths = state.orbit_lengths();
  const std::size_t ones = lengths.count(1);

  std::multiset<std::size_t> next;
  for (const std::size_t n : lengths)
    if (n > 1) next.insert(n - 1);

  std::size_t comp = state.comp();
  if (ones > 0) {
    comp -= state.length1_curves();
    if (comp == 0 && !next.empty())
      throw std::domain_error("lift: orbits of length " + std::to_string(*next.rbegin() + 1) +
                              " survive but no curve class does");
  }
  const std::size_t carriers = policy(comp, next);
  return LiftState(comp, std::move(next), carriers);
}

std::size_t lifts_to_stability(const LiftState& state, const CurvePolicy& policy) {
  std::size_t count = 0;
  LiftState cur = state;
  while (!cur.stable()) {
    cur = lift(cur, policy);
    ++count;
  }
  return count;
}

}  // namespace stabiliscope
