#include "ftcbf/simulator.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <random>
#include <thread>

namespace ftcbf {

namespace {

constexpr double kDivergedNorm = 1e9;

// Comparisons against k*dt times need a little headroom for round-off.
bool at_or_before(double t, double bound) {
  return t <= bound * (1.0 + 1e-12) + 1e-12;
}

void validate(const SimConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(cfg.T > 0.0)) throw std::invalid_argument("T must be positive");
  if (!(cfg.horizon >= cfg.T)) {
    throw std::invalid_argument("horizon must not be shorter than T");
  }
  if (cfg.init.kind != cfg.model) {
    throw std::invalid_argument("initial state kind does not match the model");
  }
  if (cfg.model == ModelKind::Bicycle && !cfg.geom.has_value()) {
    throw std::invalid_argument("bicycle model requires geometry");
  }
  const FtBaselineParams& bp = cfg.baseline_params;
  if (!(bp.p1 > 0.0 && bp.p2 > 0.0)) {
    throw std::invalid_argument("baseline gains must be positive");
  }
  if (!(bp.q1 > 0.0 && bp.q1 < 1.0 && bp.q2 > 0.0 && bp.q2 < 1.0)) {
    throw std::invalid_argument("baseline exponents must lie in (0, 1)");
  }
  if (!(bp.eps0 > 0.0)) {
    throw std::invalid_argument("baseline regularization must be positive");
  }
  if (cfg.T / cfg.dt < 100.0) {
    std::cerr << "warning: T/dt = " << cfg.T / cfg.dt
              << " gives a coarse discretization; results may be unreliable\n";
  }
}

// SplitMix64: derive a well-spread per-trial seed from (master, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

const char* method_name(Method method) {
  switch (method) {
    case Method::FixedTime: return "fixed-time";
    case Method::ExpHocbf: return "exp-hocbf";
    case Method::FtBaseline: return "ft-baseline";
  }
  return "unknown";
}

InitBox default_init_box() {
  InitBox box;
  box.ranges[0] = {0.0, 20.0};
  box.ranges[1] = {0.0, 20.0};
  box.ranges[2] = {-10.0, 10.0};
  box.ranges[3] = {-10.0, 10.0};
  return box;
}

int BatchReport::converged_by(double t) const {
  int count = 0;
  for (const auto& time : convergence_times) {
    if (time.has_value() && at_or_before(*time, t)) ++count;
  }
  return count;
}

EpisodeTrace run_episode(const SimConfig& cfg) {
  validate(cfg);

  EpisodeTrace trace;
  State x = cfg.init;

  // Freeze the method and (for fixed-time) its parameters at episode start.
  Method effective = cfg.method;
  FixedTimeParams ft_params;
  {
    const BarrierDerivatives d0 = evaluate_barrier(x, cfg.barrier, cfg.geom);
    if (cfg.method == Method::FixedTime) {
      if (d0.h >= 0.0) {
        // Already safe: fixed-time reaching does not apply, fall back to the
        // exponential constraint to stay inside.
        effective = Method::ExpHocbf;
      } else {
        ft_params = fixed_time_init(d0.h, d0.h_dot, cfg.T);
        trace.fixed_time_params = ft_params;
      }
    }
  }
  trace.method_used = effective;

  const auto n_steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));
  trace.rows.reserve(n_steps + 1);

  for (std::size_t k = 0; k <= n_steps; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;

    if (!x.values.allFinite() || x.values.norm() > kDivergedNorm) {
      trace.failure = EpisodeFailure{k, t, "state diverged"};
      break;
    }

    const BarrierDerivatives d = evaluate_barrier(x, cfg.barrier, cfg.geom);

    ConstraintRow row;
    switch (effective) {
      case Method::FixedTime:
        row = fixed_time_row(d, ft_params);
        break;
      case Method::ExpHocbf:
        row = exp_hocbf_row(d, cfg.exp_params);
        break;
      case Method::FtBaseline:
        row = ft_baseline_row(d, cfg.baseline_params);
        break;
    }

    FilterResult filtered;
    try {
      filtered = solve_filter(row);
    } catch (const InfeasibleConstraint&) {
      trace.failure = EpisodeFailure{k, t, "infeasible constraint"};
      break;
    }

    trace.rows.push_back(TraceRow{t, x.values, d.h, d.h_dot, filtered.u,
                                  filtered.slack});

    if (k < n_steps) {
      const Eigen::Vector4d xdot =
          drift(x) + input_matrix(x, cfg.geom) * filtered.u;
      x.values += cfg.dt * xdot;
    }
  }

  if (auto conv = detect_convergence(trace)) {
    trace.convergence_time = conv->first;
    trace.convergence_iteration = conv->second;
  }
  return trace;
}

BatchReport run_batch(const SimConfig& tmpl, int trials, std::uint64_t seed,
                      const InitBox& box) {
  if (trials < 0) throw std::invalid_argument("trial count must not be negative");

  for (const auto& [lo, hi] : box.ranges) {
    if (!(lo <= hi)) throw std::invalid_argument("invalid init box range");
  }

  BatchReport report;
  report.trials = trials;
  report.seeds.resize(trials);
  report.convergence_times.resize(trials);
  report.failed_before_convergence.assign(trials, false);

  auto run_trial = [&](int i) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    report.seeds[i] = trial_seed;
    std::mt19937_64 rng(trial_seed);
    SimConfig cfg = tmpl;
    cfg.init.kind = tmpl.model;
    for (int slot = 0; slot < 4; ++slot) {
      const auto [lo, hi] = box.ranges[slot];
      std::uniform_real_distribution<double> dist(lo, hi);
      cfg.init.values(slot) = (lo == hi) ? lo : dist(rng);
    }
    const EpisodeTrace trace = run_episode(cfg);
    report.convergence_times[i] = trace.convergence_time;
    report.failed_before_convergence[i] =
        trace.failure.has_value() && !trace.convergence_time.has_value();
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, trials > 0 ? trials : 1);
  if (workers <= 1 || trials <= 1) {
    for (int i = 0; i < trials; ++i) run_trial(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
          run_trial(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return report;
}

std::optional<std::pair<double, std::size_t>> detect_convergence(
    const EpisodeTrace& trace) {
  for (std::size_t k = 0; k < trace.rows.size(); ++k) {
    if (trace.rows[k].h >= 0.0) {
      return std::make_pair(trace.rows[k].t, k);
    }
  }
  return std::nullopt;
}

}  // namespace ftcbf
