#pragma once

#include "ftcbf/dynamics.hpp"

namespace ftcbf {

// Safe set: closed disk of the given radius around the center,
//   h(x) = radius^2 - ||position - center||^2,  safe <=> h >= 0.
struct BarrierSpec {
  Eigen::Vector2d center{45.0, 45.0};
  double radius = 2.0;
};

// h and its derivatives along the dynamics. h has relative degree two for
// every supported model, so
//   hdot  = Lf h            (no direct input term)
//   hddot = lf2h + lglfh.dot(u)
struct BarrierDerivatives {
  double h = 0.0;
  double h_dot = 0.0;
  double lf2h = 0.0;
  Eigen::Vector2d lglfh = Eigen::Vector2d::Zero();
};

BarrierDerivatives evaluate_barrier(
    const State& state, const BarrierSpec& spec,
    const std::optional<BicycleGeometry>& geom = std::nullopt);

}  // namespace ftcbf
