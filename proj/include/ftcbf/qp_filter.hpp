#pragma once

#include "ftcbf/constraints.hpp"

namespace ftcbf {

// Raised when the constraint row cannot be satisfied by any input
// (zero gradient with a strictly positive bound).
struct InfeasibleConstraint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FilterResult {
  ControlInput u = ControlInput::Zero();
  bool active = false;   // constraint held with equality at the solution
  double slack = 0.0;    // a.dot(u) - b (>= 0 up to round-off)
};

// Minimum-deviation safety filter:
//   minimize ||u - u_ref||^2  subject to  a.dot(u) >= b.
// Solved in closed form: keep u_ref when feasible, otherwise project onto
// the half-space boundary.
FilterResult solve_filter(const ConstraintRow& row,
                          const ControlInput& u_ref = ControlInput::Zero());

}  // namespace ftcbf
