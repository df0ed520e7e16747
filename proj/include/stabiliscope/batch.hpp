#pragma once

#include <cstddef>
#include <vector>

#include "stabiliscope/fiber_model.hpp"
#include "stabiliscope/graph_lift.hpp"
#include "stabiliscope/pl_map.hpp"
#include "stabiliscope/stabilizer.hpp"

// Bulk drivers for the embarrassingly parallel sweeps (parameter studies,
// randomized audits). Each kernel has a serial twin with identical output;
// the parallel versions degrade to the serial ones when built without
// OpenMP.
namespace stabiliscope::batch {

std::vector<Rat> eval_many(const PLMap& map, const std::vector<Rat>& qs);
std::vector<Rat> eval_many_serial(const PLMap& map, const std::vector<Rat>& qs);

struct Instance {
  FiberModel model;
  PLMap map;
};

std::vector<StabilityVerdict> analyze_many(const std::vector<Instance>& instances);
std::vector<StabilityVerdict> analyze_many_serial(const std::vector<Instance>& instances);

std::vector<std::size_t> lift_counts(const std::vector<LiftState>& states);
std::vector<std::size_t> lift_counts_serial(const std::vector<LiftState>& states);

}  // namespace stabiliscope::batch
