#include "stabiliscope/stabilizer.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "stabiliscope/errors.hpp"

namespace stabiliscope {

ResolvedOrbit resolve(const DestabOrbit& orbit, const FiberModel& model) {
  ResolvedOrbit r;
  r.start = model.mark(orbit.start_curve);
  r.points.reserve(orbit.points.size());
  for (const std::size_t g : orbit.points)
    r.points.emplace_back(model.mark(g), model.mark(g + 1));
  for (std::size_t k = orbit.inverse_first; k <= orbit.inverse_last; ++k)
    r.inverse.push_back(model.mark(k));
  r.minimal = orbit.minimal;
  return r;
}

std::vector<DestabOrbit> find_destabilizing_orbits(const FiberModel& model,
                                                   const PLMap& map,
                                                   OrbitSearchStats* stats) {
  std::vector<DestabOrbit> orbits;
  std::set<std::size_t> seen_first_gap;
  std::size_t evals = 0;

  for (std::size_t curve = 0; curve < model.curve_count(); ++curve) {
    const Placement image = curve_image(model, map, curve);
    ++evals;
    if (image.is_curve()) continue;

    // Curves contracted into an already-followed gap ride the same orbit.
    const std::size_t g0 = image.index;
    if (!seen_first_gap.insert(g0).second) continue;

    DestabOrbit orbit;
    orbit.start_curve = curve;
    orbit.points.push_back(g0);
    std::set<std::size_t> visited{g0};
    std::size_t gap = g0;
    for (;;) {
      const PointImage next = point_image(model, map, gap);
      ++evals;
      if (next.is_curves()) {
        orbit.inverse_first = next.first;
        orbit.inverse_last = next.last;
        orbits.push_back(std::move(orbit));
        break;
      }
      // A revisited gap closes a cycle that never meets an indeterminate
      // point, so this contraction is harmless.
      if (!visited.insert(next.gap).second) break;
      orbit.points.push_back(next.gap);
      gap = next.gap;
    }
  }

  if (!orbits.empty()) {
    std::size_t min_len = orbits.front().length();
    for (const DestabOrbit& o : orbits) min_len = std::min(min_len, o.length());
    for (DestabOrbit& o : orbits) o.minimal = (o.length() == min_len);
  }
  if (stats) stats->transfer_evals = evals;
  return orbits;
}

StabilityVerdict is_algebraically_stable(const FiberModel& model, const PLMap& map) {
  const std::vector<DestabOrbit> orbits = find_destabilizing_orbits(model, map);
  if (orbits.empty()) return {true, std::nullopt};
  for (const DestabOrbit& o : orbits)
    if (o.minimal) return {false, o};  // ascending start order, first minimal wins
  return {false, orbits.front()};      // unreachable: some orbit is always minimal
}

Strategy Strategy::parse(const std::string& name, std::uint64_t seed) {
  if (name == "smallest-start") return smallest_start();
  if (name == "largest-start") return largest_start();
  if (name == "random") return seeded_random(seed);
  throw std::invalid_argument("unknown strategy \"" + name + "\"");
}

std::string Strategy::name() const {
  switch (rule) {
    case TieBreak::SmallestStart: return "smallest-start";
    case TieBreak::LargestStart: return "largest-start";
    case TieBreak::SeededRandom: return "random";
  }
  return "?";
}

namespace {

const DestabOrbit& select_orbit(const std::vector<DestabOrbit>& orbits,
                                const Strategy& strategy, std::mt19937_64& rng) {
  std::vector<const DestabOrbit*> minimal;
  for (const DestabOrbit& o : orbits)
    if (o.minimal) minimal.push_back(&o);
  switch (strategy.rule) {
    case TieBreak::SmallestStart:
      return *minimal.front();
    case TieBreak::LargestStart:
      return *minimal.back();
    case TieBreak::SeededRandom: {
      std::uniform_int_distribution<std::size_t> pick(0, minimal.size() - 1);
      return *minimal[pick(rng)];
    }
  }
  return *minimal.front();
}

// Blow up every gap the orbit visits; descending order keeps the remaining
// indices valid while marks are inserted.
FiberModel blowup_orbit(const FiberModel& model, const DestabOrbit& orbit,
                        std::vector<Rat>* inserted) {
  std::vector<std::size_t> gaps = orbit.points;
  std::sort(gaps.begin(), gaps.end(), std::greater<>());
  FiberModel out = model;
  for (const std::size_t g : gaps) {
    if (inserted) inserted->push_back(mediant(out.mark(g), out.mark(g + 1)));
    out = blowup_gap(out, g);
  }
  return out;
}

FiberModel msa_step_with_rng(const FiberModel& model, const PLMap& map,
                             const Strategy& strategy, std::mt19937_64& rng,
                             MsaRound* round) {
  const std::vector<DestabOrbit> orbits = find_destabilizing_orbits(model, map);
  if (orbits.empty())
    throw std::logic_error("msa_step: the pair is already stable");
  const DestabOrbit& chosen = select_orbit(orbits, strategy, rng);
  if (round) round->orbit = resolve(chosen, model);
  return blowup_orbit(model, chosen, round ? &round->inserted : nullptr);
}

}  // namespace

FiberModel msa_step(const FiberModel& model, const PLMap& map, const Strategy& strategy) {
  std::mt19937_64 rng(strategy.seed);
  return msa_step_with_rng(model, map, strategy, rng, nullptr);
}

MsaResult run_msa(const FiberModel& model, const PLMap& map, std::size_t budget,
                  const Strategy& strategy) {
  MsaResult result{MsaResult::Status::BudgetExhausted, model, 0, {}};
  std::mt19937_64 rng(strategy.seed);
  for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
    if (find_destabilizing_orbits(result.final_model, map).empty()) {
      result.status = MsaResult::Status::Terminated;
      return result;
    }
    if (attempt == budget) break;  // no budget left to verify another round
    MsaRound round;
    result.final_model = msa_step_with_rng(result.final_model, map, strategy, rng, &round);
    result.trace.push_back(std::move(round));
    ++result.rounds;
  }
  return result;
}

Certificate verify_counterexample(const PLMap& map, std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("certificate: need steps >= 1");
  Certificate cert;
  cert.steps_checked = steps;

  const Rat up(3, 2), down(-3, 2);
  cert.slopes_ok = true;
  for (const AffinePiece& piece : map.pieces())
    if (piece.slope != up && piece.slope != down) cert.slopes_ok = false;

  cert.fold_ok = map.breakpoints().size() == 3 && map(map.breakpoints()[1]) == Rat(1);

  cert.orbit_prefix = orbit(map, Rat(1), steps);
  cert.denominators_doubling = true;
  mpz_class power(1);
  for (std::size_t m = 1; m <= steps; ++m) {
    power *= 2;
    const Rat& v = cert.orbit_prefix[m - 1];
    if (v.den() != power || v.num() % 2 == 0) cert.denominators_doubling = false;
  }
  return cert;
}

bool check_uniqueness(const FiberModel& model, const PLMap& map, std::size_t budget,
                      const std::vector<Strategy>& strategies) {
  if (strategies.empty())
    throw std::invalid_argument("uniqueness check: no strategies given");
  std::vector<std::vector<Rat>> finals;
  for (const Strategy& s : strategies) {
    const MsaResult r = run_msa(model, map, budget, s);
    if (!r.terminated())
      throw inconclusive_result("uniqueness check: strategy " + s.name() +
                                " exhausted its budget of " + std::to_string(budget));
    finals.push_back(r.final_model.marked());
  }
  for (const auto& f : finals)
    if (f != finals.front()) return false;
  return true;
}

}  // namespace stabiliscope
