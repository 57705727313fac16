#include "ftcbf/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace ftcbf {

Eigen::Vector4d drift(const State& state) {
  const Eigen::Vector4d& x = state.values;
  Eigen::Vector4d f = Eigen::Vector4d::Zero();
  switch (state.kind) {
    case ModelKind::PointMass:
      f(0) = x(2);  // vx
      f(1) = x(3);  // vy
      break;
    case ModelKind::Unicycle:
    case ModelKind::Bicycle:
      f(0) = x(3) * std::cos(x(2));  // v cos(theta)
      f(1) = x(3) * std::sin(x(2));  // v sin(theta)
      break;
  }
  return f;
}

Eigen::Matrix<double, 4, 2> input_matrix(
    const State& state, const std::optional<BicycleGeometry>& geom) {
  Eigen::Matrix<double, 4, 2> g = Eigen::Matrix<double, 4, 2>::Zero();
  switch (state.kind) {
    case ModelKind::PointMass:
      g(2, 0) = 1.0;  // ax
      g(3, 1) = 1.0;  // ay
      break;
    case ModelKind::Unicycle:
      g(2, 1) = 1.0;  // theta_dot = omega
      g(3, 0) = 1.0;  // v_dot = a
      break;
    case ModelKind::Bicycle: {
      if (!geom.has_value()) {
        throw std::invalid_argument("bicycle model requires geometry");
      }
      if (!(geom->rear_axle_distance > 0.0)) {
        throw std::invalid_argument("rear axle distance must be positive");
      }
      g(2, 1) = state.values(3) / geom->rear_axle_distance;  // theta_dot = (v/l_r) beta
      g(3, 0) = 1.0;                                         // v_dot = a
      break;
    }
  }
  return g;
}

const char* model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::PointMass: return "pointmass";
    case ModelKind::Unicycle: return "unicycle";
    case ModelKind::Bicycle: return "bicycle";
  }
  return "unknown";
}

}  // namespace ftcbf
