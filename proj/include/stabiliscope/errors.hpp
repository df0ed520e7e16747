#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stabiliscope {

// Thrown when a piecewise-linear map fails to be a self-map of [0,1]:
// every algorithm downstream iterates the map, so such inputs are refused
// at construction rather than detected mid-orbit.
class not_forward_invariant : public std::domain_error {
public:
  explicit not_forward_invariant(const std::string& what)
      : std::domain_error(what) {}
};

// Malformed external input (JSON document, CLI value). Carries the path of
// the offending field so callers can report it precisely.
class input_error : public std::runtime_error {
public:
  input_error(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

// A uniqueness check could not decide because a strategy exhausted its
// round budget before terminating.
class inconclusive_result : public std::runtime_error {
public:
  explicit inconclusive_result(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace stabiliscope
