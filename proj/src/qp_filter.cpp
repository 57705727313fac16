#include "ftcbf/qp_filter.hpp"

namespace ftcbf {

namespace {
constexpr double kNumTol = 1e-9;
}

FilterResult solve_filter(const ConstraintRow& row, const ControlInput& u_ref) {
  FilterResult result;
  const double a_sq = row.a.squaredNorm();
  if (a_sq == 0.0) {
    if (row.b > kNumTol) {
      throw InfeasibleConstraint("constraint gradient vanishes but bound is positive");
    }
    result.u = u_ref;          // vacuous row
    result.active = false;
    result.slack = -row.b;
    return result;
  }
  const double margin = row.a.dot(u_ref) - row.b;
  if (margin >= 0.0) {
    result.u = u_ref;
    result.active = false;
    result.slack = margin;
    return result;
  }
  result.u = u_ref - (margin / a_sq) * row.a;
  result.active = true;
  result.slack = row.a.dot(result.u) - row.b;
  return result;
}

}  // namespace ftcbf
