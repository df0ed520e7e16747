#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabiliscope/pl_map.hpp"
#include "stabiliscope/rational.hpp"

namespace stabiliscope {

// Where a fiber point sits relative to a model: on the curve marked by
// index `index`, or in the open gap between marks `index` and `index + 1`.
struct Placement {
  enum class Kind { MarkedCurve, GapPoint };

  Kind kind = Kind::MarkedCurve;
  std::size_t index = 0;

  static Placement marked_curve(std::size_t j) { return {Kind::MarkedCurve, j}; }
  static Placement gap_point(std::size_t j) { return {Kind::GapPoint, j}; }

  bool is_curve() const { return kind == Kind::MarkedCurve; }
  bool is_gap() const { return kind == Kind::GapPoint; }

  friend bool operator==(const Placement&, const Placement&) = default;
};

// Transfer of a gap point: either it moves to a single gap point again, or
// it is indeterminate and its image sweeps the inclusive range of marked
// curves [first, last]. A degenerate sweep of a single marked value still
// counts as Curves(k, k), never as a Point.
struct PointImage {
  enum class Kind { Point, Curves };

  Kind kind = Kind::Point;
  std::size_t gap = 0;    // Point: index of the target gap
  std::size_t first = 0;  // Curves: inclusive marked-curve range
  std::size_t last = 0;

  static PointImage point(std::size_t g) { return {Kind::Point, g, 0, 0}; }
  static PointImage curves(std::size_t k, std::size_t l) { return {Kind::Curves, 0, k, l}; }

  bool is_point() const { return kind == Kind::Point; }
  bool is_curves() const { return kind == Kind::Curves; }

  friend bool operator==(const PointImage&, const PointImage&) = default;
};

// A chain of marked exceptional curves over the fiber, indexed by the
// strictly increasing marked heights 0 = r_0 < r_1 < ... < r_n = 1.
// Consecutive marks are always Farey neighbors, so the only way to refine a
// gap is to insert its mediant — exactly what a satellite blowup does.
class FiberModel {
public:
  explicit FiberModel(std::vector<Rat> marked);

  static FiberModel initial() { return FiberModel({Rat(0), Rat(1)}); }

  const std::vector<Rat>& marked() const { return marked_; }
  const Rat& mark(std::size_t j) const;

  std::size_t curve_count() const { return marked_.size(); }
  std::size_t gap_count() const { return marked_.size() - 1; }

  friend bool operator==(const FiberModel&, const FiberModel&) = default;

private:
  std::vector<Rat> marked_;
};

// Classify q in [0,1] against the model's marks. Out of range throws
// std::domain_error.
Placement locate(const FiberModel& model, const Rat& q);

// Insert the mediant of gap `gap`'s endpoints; the result has one more mark.
// Bad gap index throws std::out_of_range.
FiberModel blowup_gap(const FiberModel& model, std::size_t gap);

// Image of the marked curve `curve` under the fiber dynamics: the placement
// of T(r_curve). A curve landing on a mark maps to that curve; one landing
// in a gap is contracted to that gap's point.
Placement curve_image(const FiberModel& model, const PLMap& map, std::size_t curve);

// Image of the point of gap `gap`: Point(k) when T(gap) meets no marked
// value, otherwise Curves(k, l) spanning exactly the marked values the
// image interval contains.
PointImage point_image(const FiberModel& model, const PLMap& map, std::size_t gap);

// The model's dual graph (a path) in DOT form, vertices labelled by marks.
std::string to_dot(const FiberModel& model);

}  // namespace stabiliscope
