#include "ftcbf/experiments.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

namespace ftcbf {

namespace {

void sink(double v) { asm volatile("" : : "g"(v) : "memory"); }

std::string fmt(double v, const char* spec = "%.9g") {
  char buf[32];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

// Barrier derivative sequence of the canonical point-mass approach, used as
// a shared workload for timing both constraint builders.
std::vector<BarrierDerivatives> workload_states() {
  SimConfig cfg = nominal_config(ModelKind::PointMass, Method::FixedTime, 10.0, 1e-3);
  cfg.init.values = Eigen::Vector4d(0.0, 0.0, -10.0, 0.0);
  const EpisodeTrace trace = run_episode(cfg);
  std::vector<BarrierDerivatives> out;
  const std::size_t limit = trace.convergence_iteration.value_or(trace.rows.size());
  out.reserve(limit);
  for (std::size_t k = 0; k < limit; ++k) {
    State s{trace.rows[k].state, ModelKind::PointMass};
    out.push_back(evaluate_barrier(s, cfg.barrier));
  }
  return out;
}

}  // namespace

SimConfig nominal_config(ModelKind model, Method method, double T, double dt) {
  SimConfig cfg;
  cfg.model = model;
  cfg.method = method;
  cfg.T = T;
  cfg.dt = dt;
  cfg.horizon = 1.5 * T;
  cfg.init.kind = model;
  cfg.init.values.setZero();
  if (model == ModelKind::Bicycle) cfg.geom = BicycleGeometry{};
  return cfg;
}

std::vector<ConvergenceTimeRow> run_convergence_table(
    const std::vector<double>& dts) {
  std::vector<ConvergenceTimeRow> rows;
  for (ModelKind model :
       {ModelKind::PointMass, ModelKind::Unicycle, ModelKind::Bicycle}) {
    for (double dt : dts) {
      const SimConfig cfg = nominal_config(model, Method::FixedTime, 10.0, dt);
      const EpisodeTrace trace = run_episode(cfg);
      rows.push_back(ConvergenceTimeRow{model, dt, trace.convergence_time});
    }
  }
  return rows;
}

std::vector<BatchCountRow> run_batch_table(int trials, std::uint64_t seed) {
  std::vector<BatchCountRow> rows;
  const InitBox box = default_init_box();
  for (ModelKind model :
       {ModelKind::PointMass, ModelKind::Unicycle, ModelKind::Bicycle}) {
    const SimConfig cfg = nominal_config(model, Method::FixedTime, 5.0, 1e-3);
    const BatchReport report = run_batch(cfg, trials, seed, box);
    rows.push_back(BatchCountRow{model, report.trials,
                                 report.converged_by(cfg.T),
                                 report.converged_by(1.5 * cfg.T)});
  }
  return rows;
}

StepCostReport measure_step_cost(int repeats) {
  const std::vector<BarrierDerivatives> states = workload_states();
  const FixedTimeParams ft_params = fixed_time_init(-4046.0, -900.0, 10.0);
  const FtBaselineParams bl_params;
  const ControlInput u_ref = ControlInput::Zero();

  auto time_ns_per_step = [&](auto&& build) {
    using clock = std::chrono::steady_clock;
    // One untimed sweep warms caches and the branch predictor.
    for (const BarrierDerivatives& d : states) {
      sink(solve_filter(build(d), u_ref).u.sum());
    }
    const auto start = clock::now();
    for (int r = 0; r < repeats; ++r) {
      for (const BarrierDerivatives& d : states) {
        sink(solve_filter(build(d), u_ref).u.sum());
      }
    }
    const auto stop = clock::now();
    const double total_ns =
        std::chrono::duration<double, std::nano>(stop - start).count();
    return total_ns / (static_cast<double>(repeats) * states.size());
  };

  StepCostReport report;
  report.fixed_time_ns =
      time_ns_per_step([&](const BarrierDerivatives& d) {
        return fixed_time_row(d, ft_params);
      });
  report.baseline_ns =
      time_ns_per_step([&](const BarrierDerivatives& d) {
        return ft_baseline_row(d, bl_params);
      });
  report.fixed_time_power_evals = 0;
  report.baseline_power_evals = 3;
  return report;
}

HeadToHeadReport run_head_to_head(int trials, std::uint64_t seed) {
  HeadToHeadReport report;
  report.trials = trials;
  const double T = 5.0;
  report.deadline = 3.0 * T;
  const InitBox box = default_init_box();

  SimConfig cfg = nominal_config(ModelKind::PointMass, Method::FixedTime, T, 1e-3);
  cfg.horizon = report.deadline;
  const BatchReport proposed = run_batch(cfg, trials, seed, box);
  report.reached_fixed_time = proposed.converged_by(report.deadline);

  cfg.method = Method::FtBaseline;
  const BatchReport baseline = run_batch(cfg, trials, seed, box);
  report.reached_baseline = baseline.converged_by(report.deadline);

  report.cost = measure_step_cost();
  return report;
}

CompareResult run_compare(const SimConfig& base_cfg) {
  CompareResult result;
  result.T = base_cfg.T;
  result.horizon = base_cfg.horizon;

  SimConfig cfg = base_cfg;
  cfg.method = Method::FixedTime;
  result.fixed_time = run_episode(cfg);
  cfg.method = Method::FtBaseline;
  result.baseline = run_episode(cfg);
  return result;
}

void write_convergence_table_csv(const std::vector<ConvergenceTimeRow>& rows,
                                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "model,dt,convergence_time_s\n";
  for (const auto& row : rows) {
    out << model_name(row.model) << ',' << fmt(row.dt) << ','
        << (row.convergence_time ? fmt(*row.convergence_time) : "none") << '\n';
  }
}

void write_batch_table_csv(const std::vector<BatchCountRow>& rows,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "model,trials,converged_by_T,converged_by_1.5T\n";
  for (const auto& row : rows) {
    out << model_name(row.model) << ',' << row.trials << ','
        << row.converged_by_deadline << ',' << row.converged_by_1p5_deadline
        << '\n';
  }
}

void write_head_to_head_csv(const HeadToHeadReport& report,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "metric,ft_baseline,fixed_time\n";
  out << "reached_goal_by_3T_of_" << report.trials << ','
      << report.reached_baseline << ',' << report.reached_fixed_time << '\n';
  out << "step_cost_ns," << fmt(report.cost.baseline_ns, "%.6g") << ','
      << fmt(report.cost.fixed_time_ns, "%.6g") << '\n';
  out << "power_evals_per_step," << report.cost.baseline_power_evals << ','
      << report.cost.fixed_time_power_evals << '\n';
  out << "user_tuned_parameters," << report.baseline_user_params << ','
      << report.fixed_time_user_params << '\n';
}

}  // namespace ftcbf
