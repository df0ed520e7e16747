#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stabiliscope/rational.hpp"

namespace stabiliscope {

// A monomial map (x, y) |-> (x^n, x^alpha y^beta) recorded by its exponent
// data: n and the list of (alpha, beta) pairs of the second coordinate's
// monomials. In the fiber coordinate q the i-th monomial acts as the affine
// map q |-> (alpha_i + beta_i q) / n, and the induced fiber dynamics is the
// lower envelope of those lines (minimal valuation wins).
struct MapSpec {
  long n = 1;
  std::vector<std::pair<long, long>> monomials;

  // Throws std::invalid_argument unless n >= 1, monomials is a nonempty
  // list of distinct pairs, and some beta is nonzero.
  void validate() const;
};

struct AffinePiece {
  Rat slope;
  Rat intercept;

  Rat at(const Rat& q) const { return slope * q + intercept; }

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

// Continuous piecewise-affine self-map of [0,1] with rational breakpoints
// and rational affine pieces. Breakpoints are strictly increasing from 0 to
// 1; piece i covers [breakpoints[i], breakpoints[i+1]]; adjacent pieces
// agree at shared breakpoints; all values stay inside [0,1] (checked at
// construction, violations throw not_forward_invariant).
class PLMap {
public:
  PLMap(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces);

  // Convenience: interpolate the graph through (breakpoints[i], values[i]).
  // Continuity holds by construction; range violations still throw.
  static PLMap from_values(std::vector<Rat> breakpoints, std::vector<Rat> values);

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  // Evaluate at q in [0,1]; outside the domain throws std::domain_error.
  Rat operator()(const Rat& q) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

private:
  std::vector<Rat> breakpoints_;
  std::vector<AffinePiece> pieces_;
};

// Lower envelope q |-> min_i (alpha_i + beta_i q) / n over [0,1], with a
// minimal breakpoint set (adjacent pieces always differ). Throws
// not_forward_invariant when the envelope leaves [0,1].
PLMap build_tf(const MapSpec& spec);

// [T(q0), T^2(q0), ..., T^steps(q0)].
std::vector<Rat> orbit(const PLMap& map, const Rat& q0, std::size_t steps);

// Image of an open interval under a continuous map: an interval with
// individually open or closed ends.
struct ImageSet {
  Rat lo;
  Rat hi;
  bool lo_attained = false;
  bool hi_attained = false;

  bool contains(const Rat& r) const {
    if (lo < r && r < hi) return true;
    if (r == lo && lo_attained) return true;
    if (r == hi && hi_attained) return true;
    return false;
  }

  friend bool operator==(const ImageSet&, const ImageSet&) = default;
};

// Exact image T((p,q)) for 0 <= p < q <= 1. A bound is attained exactly
// when some interior node (breakpoint of T inside (p,q)) or some constant
// sub-segment realises it; endpoint values of the open interval only bound
// the image. Preconditions violated -> std::invalid_argument.
ImageSet image_interval(const PLMap& map, const Rat& p, const Rat& q);

}  // namespace stabiliscope
