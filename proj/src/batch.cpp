#include "stabiliscope/batch.hpp"

namespace stabiliscope::batch {

std::vector<Rat> eval_many(const PLMap& map, const std::vector<Rat>& qs) {
  std::vector<Rat> out(qs.size());
  const auto n = static_cast<std::ptrdiff_t>(qs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = map(qs[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<Rat> eval_many_serial(const PLMap& map, const std::vector<Rat>& qs) {
  std::vector<Rat> out;
  out.reserve(qs.size());
  for (const Rat& q : qs) out.push_back(map(q));
  return out;
}

std::vector<StabilityVerdict> analyze_many(const std::vector<Instance>& instances) {
  std::vector<StabilityVerdict> out(instances.size());
  const auto n = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Instance& inst = instances[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = is_algebraically_stable(inst.model, inst.map);
  }
  return out;
}

std::vector<StabilityVerdict> analyze_many_serial(const std::vector<Instance>& instances) {
  std::vector<StabilityVerdict> out;
  out.reserve(instances.size());
  for (const Instance& inst : instances)
    out.push_back(is_algebraically_stable(inst.model, inst.map));
  return out;
}

std::vector<std::size_t> lift_counts(const std::vector<LiftState>& states) {
  std::vector<std::size_t> out(states.size());
  const auto n = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = lifts_to_stability(states[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::size_t> lift_counts_serial(const std::vector<LiftState>& states) {
  std::vector<std::size_t> out;
  out.reserve(states.size());
  for (const LiftState& s : states) out.push_back(lifts_to_stability(s));
  return out;
}

}  // namespace stabiliscope::batch
