#pragma once

#include <stdexcept>
#include <string>

namespace nlsh {

// omega <= alpha^2: no stationary profile exists at this frequency. This is
// a structural outcome, not a numerical failure, so it gets its own type.
struct NoBoundStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested mass lies outside the image of the selected monotone branch.
struct OutOfRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Branch selector inconsistent with the (p, alpha) regime.
struct BranchInvalidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bracketed iteration failed to locate a root or a sign change.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nlsh
