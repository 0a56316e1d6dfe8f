#pragma once

#include <stdexcept>
#include <string>

namespace guplab {

// Thrown when a value leaves the compact range of the arctan momentum map,
// i.e. |P|*sqrt(beta) reaches pi/2 (up to the configured guard).
class DomainExceeded : public std::runtime_error {
 public:
  explicit DomainExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations: bad parameters, malformed configs, chart/method
// mismatches. CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace guplab
