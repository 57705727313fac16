#include "ftcbf/barrier.hpp"

#include <cmath>
#include <stdexcept>

namespace ftcbf {

BarrierDerivatives evaluate_barrier(
    const State& state, const BarrierSpec& spec,
    const std::optional<BicycleGeometry>& geom) {
  const Eigen::Vector4d& x = state.values;
  const double dx = x(0) - spec.center(0);
  const double dy = x(1) - spec.center(1);

  BarrierDerivatives d;
  d.h = spec.radius * spec.radius - dx * dx - dy * dy;

  switch (state.kind) {
    case ModelKind::PointMass: {
      const double vx = x(2);
      const double vy = x(3);
      d.h_dot = -2.0 * (dx * vx + dy * vy);
      d.lf2h = -2.0 * (vx * vx + vy * vy);
      d.lglfh = Eigen::Vector2d(-2.0 * dx, -2.0 * dy);
      break;
    }
    case ModelKind::Unicycle:
    case ModelKind::Bicycle: {
      const double theta = x(2);
      const double v = x(3);
      const double ct = std::cos(theta);
      const double st = std::sin(theta);
      // Projections of the center offset on the heading and its normal.
      const double along = dx * ct + dy * st;
      const double across = -dx * st + dy * ct;
      d.h_dot = -2.0 * v * along;
      d.lf2h = -2.0 * v * v;
      double steer_gain = v;  // theta_dot = omega directly
      if (state.kind == ModelKind::Bicycle) {
        if (!geom.has_value()) {
          throw std::invalid_argument("bicycle model requires geometry");
        }
        steer_gain = v * v / geom->rear_axle_distance;  // theta_dot = (v/l_r) beta
      }
      d.lglfh = Eigen::Vector2d(-2.0 * along, -2.0 * steer_gain * across);
      break;
    }
  }
  return d;
}

}  // namespace ftcbf
