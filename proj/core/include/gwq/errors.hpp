#pragma once

#include <stdexcept>
#include <string>

namespace gwq {

// Invalid parameters: bad model sizes, non-effective curve classes,
// classes outside a model's basis, malformed input text.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed request the engine has no algorithm for (for instance a
// k-point invariant of a Grassmannian that is not a projective space).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gwq
