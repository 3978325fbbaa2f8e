#pragma once

#include <stdexcept>
#include <string>

namespace curvesim {

// User-facing configuration / input problem. The CLI maps this to exit 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Internal simulation failure (non-finite state, non-convergence). Exit 3.
class SimulationFault : public std::runtime_error {
 public:
  explicit SimulationFault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace curvesim
