#include "stabiliscope/pl_map.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stabiliscope/errors.hpp"

namespace stabiliscope {

void MapSpec::validate() const {
  if (n < 1) throw std::invalid_argument("map spec: n must be >= 1");
  if (monomials.empty()) throw std::invalid_argument("map spec: no monomials");
  std::set<std::pair<long, long>> distinct(monomials.begin(), monomials.end());
  if (distinct.size() != monomials.size())
    throw std::invalid_argument("map spec: duplicate monomial");
  bool dominant = false;
  for (const auto& [alpha, beta] : monomials)
    if (beta != 0) dominant = true;
  if (!dominant)
    throw std::invalid_argument("map spec: every beta exponent vanishes");
}

PLMap::PLMap(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2)
    throw std::invalid_argument("pl map: need at least two breakpoints");
  if (pieces_.size() + 1 != breakpoints_.size())
    throw std::invalid_argument("pl map: piece count must be breakpoint count minus one");
  if (breakpoints_.front() != Rat(0) || breakpoints_.back() != Rat(1))
    throw std::invalid_argument("pl map: breakpoints must run from 0 to 1");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("pl map: breakpoints must be strictly increasing");
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (pieces_[i].at(breakpoints_[i + 1]) != pieces_[i + 1].at(breakpoints_[i + 1]))
      throw std::invalid_argument("pl map: discontinuous at " + breakpoints_[i + 1].str());
  const Rat zero(0), one(1);
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    for (const Rat& q : {breakpoints_[i], breakpoints_[i + 1]}) {
      const Rat v = pieces_[i].at(q);
      if (v < zero || one < v)
        throw not_forward_invariant("pl map: value " + v.str() + " at q = " +
                                    q.str() + " escapes [0,1]");
    }
}

PLMap PLMap::from_values(std::vector<Rat> breakpoints, std::vector<Rat> values) {
  if (values.size() != breakpoints.size())
    throw std::invalid_argument("pl map: need one value per breakpoint");
  if (breakpoints.size() < 2)
    throw std::invalid_argument("pl map: need at least two breakpoints");
  std::vector<AffinePiece> pieces;
  pieces.reserve(breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const Rat dx = breakpoints[i + 1] - breakpoints[i];
    if (!(Rat(0) < dx))
      throw std::invalid_argument("pl map: breakpoints must be strictly increasing");
    const Rat slope = (values[i + 1] - values[i]) / dx;
    pieces.push_back({slope, values[i] - slope * breakpoints[i]});
  }
  return PLMap(std::move(breakpoints), std::move(pieces));
}

Rat PLMap::operator()(const Rat& q) const {
  if (q < Rat(0) || Rat(1) < q)
    throw std::domain_error("pl map: " + q.str() + " is outside [0,1]");
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), q);
  std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  if (i >= pieces_.size()) i = pieces_.size() - 1;  // q == 1 uses the last piece
  return pieces_[i].at(q);
}

PLMap build_tf(const MapSpec& spec) {
  spec.validate();
  const Rat n(spec.n);
  std::vector<AffinePiece> lines;
  lines.reserve(spec.monomials.size());
  for (const auto& [alpha, beta] : spec.monomials)
    lines.push_back({Rat(beta) / n, Rat(alpha) / n});

  // Candidate breakpoints: the endpoints plus every pairwise crossing that
  // lands strictly inside (0,1).
  const Rat zero(0), one(1);
  std::vector<Rat> xs{zero, one};
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      const Rat x = (lines[j].intercept - lines[i].intercept) /
                    (lines[i].slope - lines[j].slope);
      if (zero < x && x < one) xs.push_back(x);
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Between consecutive candidates no two distinct lines can cross, so the
  // midpoint picks each cell's winner unambiguously.
  std::vector<AffinePiece> winners;
  winners.reserve(xs.size() - 1);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rat mid = (xs[k] + xs[k + 1]) / Rat(2);
    std::size_t best = 0;
    Rat best_val = lines[0].at(mid);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Rat v = lines[i].at(mid);
      if (v < best_val) {
        best = i;
        best_val = v;
      }
    }
    winners.push_back(lines[best]);
  }

  // Merge cells won by the same line so the breakpoint set is minimal.
  std::vector<Rat> bps{zero};
  std::vector<AffinePiece> pieces{winners[0]};
  for (std::size_t k = 1; k < winners.size(); ++k)
    if (!(winners[k] == pieces.back())) {
      bps.push_back(xs[k]);
      pieces.push_back(winners[k]);
    }
  bps.push_back(one);
  return PLMap(std::move(bps), std::move(pieces));
}

std::vector<Rat> orbit(const PLMap& map, const Rat& q0, std::size_t steps) {
  std::vector<Rat> out;
  out.reserve(steps);
  Rat cur = q0;
  for (std::size_t i = 0; i < steps; ++i) {
    cur = map(cur);
    out.push_back(cur);
  }
  return out;
}

ImageSet image_interval(const PLMap& map, const Rat& p, const Rat& q) {
  if (p < Rat(0) || Rat(1) < q || !(p < q))
    throw std::invalid_argument("image_interval: need 0 <= p < q <= 1");
  std::vector<Rat> nodes{p};
  for (const Rat& b : map.breakpoints())
    if (p < b && b < q) nodes.push_back(b);
  nodes.push_back(q);

  std::vector<Rat> vals;
  vals.reserve(nodes.size());
  for (const Rat& x : nodes) vals.push_back(map(x));

  ImageSet s;
  s.lo = s.hi = vals.front();
  for (const Rat& v : vals) {
    if (v < s.lo) s.lo = v;
    if (s.hi < v) s.hi = v;
  }

  // A bound belongs to the image iff an interior node hits it or some piece
  // is constant at it; values at the open interval's own endpoints are only
  // approached.
  const auto attained = [&](const Rat& w) {
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
      if (vals[i] == w) return true;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      if (vals[i] == w && vals[i + 1] == w) return true;
    return false;
  };
  s.lo_attained = attained(s.lo);
  s.hi_attained = attained(s.hi);
  return s;
}

}  // namespace stabiliscope
