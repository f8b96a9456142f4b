#pragma once

#include <stdexcept>
#include <string>

namespace mudsim {

// Commanded pose leaves the invertible region of the force map.
struct SingularPoseError : std::runtime_error {
  explicit SingularPoseError(const std::string& what) : std::runtime_error(what) {}
};

// Commanded torque exceeds the motor limit.
struct TorqueLimitError : std::runtime_error {
  explicit TorqueLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Water fraction outside the catalog span.
struct OutOfRangeError : std::runtime_error {
  explicit OutOfRangeError(const std::string& what) : std::runtime_error(what) {}
};

// Commanded insertion depth unreachable somewhere along the sweep.
struct WorkspaceError : std::runtime_error {
  explicit WorkspaceError(const std::string& what) : std::runtime_error(what) {}
};

// Bad experiment configuration (schema violation, invalid combination).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mudsim
