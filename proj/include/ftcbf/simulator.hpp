#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftcbf/qp_filter.hpp"

namespace ftcbf {

enum class Method { FixedTime, ExpHocbf, FtBaseline };

const char* method_name(Method method);

struct SimConfig {
  ModelKind model = ModelKind::PointMass;
  Method method = Method::FixedTime;
  double T = 10.0;       // prescribed convergence deadline [s]
  double dt = 1e-3;      // integration step [s]
  double horizon = 15.0; // simulated duration [s], >= T
  State init;            // init.kind must match model
  BarrierSpec barrier;
  std::optional<BicycleGeometry> geom;  // required for the bicycle
  ExpHocbfParams exp_params;
  FtBaselineParams baseline_params;
};

struct TraceRow {
  double t = 0.0;
  Eigen::Vector4d state = Eigen::Vector4d::Zero();
  double h = 0.0;
  double h_dot = 0.0;
  ControlInput u = ControlInput::Zero();
  double slack = 0.0;
};

// A hard stop before the horizon: the filter ran out of feasible inputs or
// the state left the representable range.
struct EpisodeFailure {
  std::size_t iteration = 0;
  double t = 0.0;
  std::string reason;
};

struct EpisodeTrace {
  std::vector<TraceRow> rows;
  std::optional<double> convergence_time;        // first t with h >= 0
  std::optional<std::size_t> convergence_iteration;
  std::optional<EpisodeFailure> failure;
  std::optional<FixedTimeParams> fixed_time_params;  // frozen at step 0
  Method method_used = Method::FixedTime;  // after safe-start rerouting
};

// Axis-aligned box of initial states, one (lo, hi) range per state slot.
struct InitBox {
  std::array<std::pair<double, double>, 4> ranges;
};

// The benchmark's initial-condition box: position in [0,20]^2 and the two
// remaining slots (velocities, or heading and speed) in [-10,10]^2.
InitBox default_init_box();

struct BatchReport {
  int trials = 0;
  std::vector<std::uint64_t> seeds;                    // per-trial RNG seed
  std::vector<std::optional<double>> convergence_times;
  std::vector<bool> failed_before_convergence;

  // Number of trials whose first crossing happened at or before t.
  int converged_by(double t) const;
};

// Run one closed-loop episode with explicit Euler integration and the
// minimum-deviation filter around a zero reference input.
EpisodeTrace run_episode(const SimConfig& cfg);

// Run seeded trials with initial states drawn uniformly from the box.
// Trial i uses an RNG stream derived from (seed, i), so reports are
// reproducible and independent of execution order.
BatchReport run_batch(const SimConfig& tmpl, int trials, std::uint64_t seed,
                      const InitBox& box);

// First row index (and its time) with h >= 0, if any.
std::optional<std::pair<double, std::size_t>> detect_convergence(
    const EpisodeTrace& trace);

}  // namespace ftcbf
