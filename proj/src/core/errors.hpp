#pragma once

#include <stdexcept>
#include <string>

namespace rmg {

// Malformed or out-of-contract input (bad file, bad index, carrier mismatch).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a configured capacity bound.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rmg
