#pragma once

// Independent reference computations the tests compare the library
// against. These deliberately take different algorithmic routes from the
// implementation: the envelope oracle never builds pieces, and the
// stability oracle decides by reverse reachability on the full gap graph
// instead of following orbits forward.

#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "stabiliscope/fiber_model.hpp"
#include "stabiliscope/pl_map.hpp"
#include "stabiliscope/rational.hpp"

namespace testsupport {

using stabiliscope::FiberModel;
using stabiliscope::MapSpec;
using stabiliscope::PLMap;
using stabiliscope::PointImage;
using stabiliscope::Placement;
using stabiliscope::Rat;

// min_i (alpha_i + beta_i q) / n, evaluated directly.
inline Rat envelope_min(const MapSpec& spec, const Rat& q) {
  const Rat n(spec.n);
  bool first = true;
  Rat best(0);
  for (const auto& [alpha, beta] : spec.monomials) {
    const Rat v = (Rat(alpha) + Rat(beta) * q) / n;
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

struct OracleVerdict {
  bool stable = true;
  // Shortest destabilising orbit length when unstable.
  std::size_t min_length = std::numeric_limits<std::size_t>::max();
};

// Decide stability by building the whole gap-transition graph: mark the
// indeterminate gaps, run a reverse breadth-first search to find every gap
// from which indeterminacy is reachable, then test each contracted curve's
// landing gap against that set.
inline OracleVerdict oracle_stability(const FiberModel& model, const PLMap& map) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t gaps = model.gap_count();

  std::vector<std::optional<std::size_t>> next(gaps);
  std::vector<std::vector<std::size_t>> rev(gaps);
  std::vector<std::size_t> dist(gaps, kInf);
  std::deque<std::size_t> frontier;
  for (std::size_t g = 0; g < gaps; ++g) {
    const PointImage pi = point_image(model, map, g);
    if (pi.is_curves()) {
      dist[g] = 0;
      frontier.push_back(g);
    } else {
      next[g] = pi.gap;
      rev[pi.gap].push_back(g);
    }
  }
  while (!frontier.empty()) {
    const std::size_t g = frontier.front();
    frontier.pop_front();
    for (const std::size_t p : rev[g])
      if (dist[p] == kInf) {
        dist[p] = dist[g] + 1;
        frontier.push_back(p);
      }
  }

  OracleVerdict verdict;
  for (std::size_t curve = 0; curve < model.curve_count(); ++curve) {
    const Placement image = curve_image(model, map, curve);
    if (image.is_curve()) continue;
    if (dist[image.index] == kInf) continue;
    verdict.stable = false;
    verdict.min_length = std::min(verdict.min_length, dist[image.index] + 1);
  }
  return verdict;
}

inline mpz_class fib(std::size_t n) {
  mpz_class a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace testsupport
