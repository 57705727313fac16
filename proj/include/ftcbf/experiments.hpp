#pragma once

#include <string>
#include <vector>

#include "ftcbf/trace_io.hpp"

namespace ftcbf {

// Canonical benchmark scenario: drive each vehicle from rest at the origin
// into the disk of radius 2 around (45, 45) within T = 10 s.
SimConfig nominal_config(ModelKind model, Method method, double T, double dt);

// Convergence time of every model at two step sizes (single episode each,
// started from rest at the origin, T = 10 s).
struct ConvergenceTimeRow {
  ModelKind model;
  double dt = 0.0;
  std::optional<double> convergence_time;
};
std::vector<ConvergenceTimeRow> run_convergence_table(
    const std::vector<double>& dts = {1e-3, 1e-4});

// Batch convergence counts per model: trials drawn from the default init
// box, T = 5 s, dt = 1e-3, counting first crossings by T and by 1.5 T.
struct BatchCountRow {
  ModelKind model;
  int trials = 0;
  int converged_by_deadline = 0;
  int converged_by_1p5_deadline = 0;
};
std::vector<BatchCountRow> run_batch_table(int trials, std::uint64_t seed);

// Mean wall-clock cost of assembling one constraint row and solving the
// filter, measured over the same precomputed state sequence for both
// methods. Also reports how many floating-point power evaluations each
// row assembly performs (the only transcendental calls in either path).
struct StepCostReport {
  double fixed_time_ns = 0.0;
  double baseline_ns = 0.0;
  int fixed_time_power_evals = 0;  // 0: multiply-adds only
  int baseline_power_evals = 0;    // 3: |psi0|^q1, |psi0|^(q1-1), |psi1|^q2
};
StepCostReport measure_step_cost(int repeats = 300);

// Head-to-head on the point-mass model over the default init box: fraction
// reaching the safe set within 3 T for the proposed constraint vs. the
// finite-time baseline, plus per-step cost and parameter-count comparison.
struct HeadToHeadReport {
  int trials = 0;
  double deadline = 0.0;  // 3 T [s]
  int reached_fixed_time = 0;
  int reached_baseline = 0;
  StepCostReport cost;
  int fixed_time_user_params = 0;  // the deadline T is the whole interface
  int baseline_user_params = 3;    // p1, q1, q2 must be hand-tuned
};
HeadToHeadReport run_head_to_head(int trials, std::uint64_t seed);

// Single-scenario comparison from one initial state: one episode per method.
struct CompareResult {
  EpisodeTrace fixed_time;
  EpisodeTrace baseline;
  double T = 0.0;
  double horizon = 0.0;
};
CompareResult run_compare(const SimConfig& base_cfg);

// CSV emitters for the reports above.
void write_convergence_table_csv(const std::vector<ConvergenceTimeRow>& rows,
                                 const std::string& path);
void write_batch_table_csv(const std::vector<BatchCountRow>& rows,
                           const std::string& path);
void write_head_to_head_csv(const HeadToHeadReport& report,
                            const std::string& path);

}  // namespace ftcbf
