#pragma once

#include <Eigen/Dense>
#include <optional>

namespace ftcbf {

enum class ModelKind { PointMass, Unicycle, Bicycle };

// All models are control-affine with four states and two inputs:
//   xdot = f(x) + g(x) u
// State layout:
//   PointMass: (x, y, vx, vy), u = (ax, ay)
//   Unicycle:  (x, y, theta, v), u = (a, omega)
//   Bicycle:   (x, y, theta, v), u = (a, beta); theta_dot = (v / l_r) * beta
struct State {
  Eigen::Vector4d values = Eigen::Vector4d::Zero();
  ModelKind kind = ModelKind::PointMass;
};

using ControlInput = Eigen::Vector2d;

// Rear-axle geometry for the kinematic bicycle.
struct BicycleGeometry {
  double rear_axle_distance = 10.0;  // l_r > 0 [m]
};

// Drift term f(x).
Eigen::Vector4d drift(const State& state);

// Input matrix g(x); the bicycle needs its geometry, other models ignore it.
Eigen::Matrix<double, 4, 2> input_matrix(
    const State& state,
    const std::optional<BicycleGeometry>& geom = std::nullopt);

const char* model_name(ModelKind kind);

}  // namespace ftcbf
