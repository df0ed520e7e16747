#include "stabiliscope/json_io.hpp"

#include <utility>
#include <vector>

#include "stabiliscope/errors.hpp"

namespace stabiliscope::io {

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw input_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw input_error(path + "/" + key, "missing");
  return *it;
}

long integer_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw input_error(path, "expected an integer");
  return j.get<long>();
}

std::size_t size_at(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw input_error(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw input_error(path, "expected an array");
  return j;
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

json to_json(const MapSpec& spec) {
  json monomials = json::array();
  for (const auto& [alpha, beta] : spec.monomials)
    monomials.push_back(json::array({alpha, beta}));
  return json{{"n", spec.n}, {"monomials", std::move(monomials)}};
}

json to_json(const PLMap& map) {
  json bps = json::array();
  for (const Rat& b : map.breakpoints()) bps.push_back(b.str());
  json pieces = json::array();
  for (const AffinePiece& p : map.pieces())
    pieces.push_back(json{{"slope", p.slope.str()}, {"intercept", p.intercept.str()}});
  return json{{"breakpoints", std::move(bps)}, {"pieces", std::move(pieces)}};
}

json to_json(const FiberModel& model) {
  json marks = json::array();
  for (const Rat& r : model.marked()) marks.push_back(r.str());
  return json{{"marked", std::move(marks)}};
}

json to_json(const LiftState& state) {
  json lengths = json::array();
  for (const std::size_t n : state.orbit_lengths()) lengths.push_back(n);
  return json{{"comp", state.comp()},
              {"lengths", std::move(lengths)},
              {"length1_curves", state.length1_curves()}};
}

json to_json(const ResolvedOrbit& orbit) {
  json points = json::array();
  for (const auto& [lo, hi] : orbit.points)
    points.push_back(json{{"gap_lo", lo.str()}, {"gap_hi", hi.str()}});
  json inverse = json::array();
  for (const Rat& r : orbit.inverse) inverse.push_back(r.str());
  return json{{"start", orbit.start.str()},
              {"points", std::move(points)},
              {"length", orbit.points.size()},
              {"inverse", std::move(inverse)}};
}

json to_json(const Certificate& cert) {
  json prefix = json::array();
  for (const Rat& r : cert.orbit_prefix) prefix.push_back(r.str());
  return json{{"slopes_ok", cert.slopes_ok},
              {"fold_ok", cert.fold_ok},
              {"orbit_prefix", std::move(prefix)},
              {"denominators_doubling", cert.denominators_doubling},
              {"steps_checked", cert.steps_checked},
              {"valid", cert.valid()}};
}

Rat rat_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) throw input_error(path, "expected a rational string \"a/b\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw input_error(path, e.what());
  }
}

MapSpec mapspec_from_json(const json& j, const std::string& path) {
  MapSpec spec;
  spec.n = integer_at(field(j, "n", path), path + "/n");
  const json& monomials = array_at(field(j, "monomials", path), path + "/monomials");
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const std::string mpath = path + "/monomials/" + std::to_string(i);
    const json& m = monomials[i];
    if (!m.is_array() || m.size() != 2)
      throw input_error(mpath, "expected an [alpha, beta] pair");
    spec.monomials.emplace_back(integer_at(m[0], mpath + "/0"),
                                integer_at(m[1], mpath + "/1"));
  }
  try {
    spec.validate();
  } catch (const std::exception& e) {
    throw input_error(path, e.what());
  }
  return spec;
}

PLMap plmap_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw input_error(path, "expected an object");
  if (j.contains("n") || j.contains("monomials")) {
    const MapSpec spec = mapspec_from_json(j, path);
    try {
      return build_tf(spec);
    } catch (const std::exception& e) {
      throw input_error(path, e.what());
    }
  }

  const json& bps = array_at(field(j, "breakpoints", path), path + "/breakpoints");
  std::vector<Rat> breakpoints;
  for (std::size_t i = 0; i < bps.size(); ++i)
    breakpoints.push_back(rat_from_json(bps[i], path + "/breakpoints/" + std::to_string(i)));

  const json& ps = array_at(field(j, "pieces", path), path + "/pieces");
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string ppath = path + "/pieces/" + std::to_string(i);
    Rat slope = rat_from_json(field(ps[i], "slope", ppath), ppath + "/slope");
    Rat intercept = rat_from_json(field(ps[i], "intercept", ppath), ppath + "/intercept");
    pieces.push_back({std::move(slope), std::move(intercept)});
  }
  try {
    return PLMap(std::move(breakpoints), std::move(pieces));
  } catch (const std::exception& e) {
    throw input_error(path, e.what());
  }
}

FiberModel model_from_json(const json& j, const std::string& path) {
  const json& marks = array_at(field(j, "marked", path), path + "/marked");
  std::vector<Rat> marked;
  for (std::size_t i = 0; i < marks.size(); ++i)
    marked.push_back(rat_from_json(marks[i], path + "/marked/" + std::to_string(i)));
  try {
    return FiberModel(std::move(marked));
  } catch (const std::exception& e) {
    throw input_error(path + "/marked", e.what());
  }
}

LiftState lift_state_from_json(const json& j, const std::string& path) {
  const std::size_t comp = size_at(field(j, "comp", path), path + "/comp");
  const json& ls = array_at(field(j, "lengths", path), path + "/lengths");
  std::multiset<std::size_t> lengths;
  for (std::size_t i = 0; i < ls.size(); ++i)
    lengths.insert(size_at(ls[i], path + "/lengths/" + std::to_string(i)));
  const std::size_t ones =
      size_at(field(j, "length1_curves", path), path + "/length1_curves");
  try {
    return LiftState(comp, std::move(lengths), ones);
  } catch (const std::exception& e) {
    throw input_error(path, e.what());
  }
}

std::string canonical(const json& j) { return j.dump(); }

}  // namespace stabiliscope::io
