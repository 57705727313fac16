#pragma once

#include <stdexcept>

#include "ftcbf/barrier.hpp"

namespace ftcbf {

// Half-space constraint on the input: a.dot(u) >= b.
struct ConstraintRow {
  Eigen::Vector2d a = Eigen::Vector2d::Zero();
  double b = 0.0;
};

// Parameters of the fixed-time constraint, frozen at episode start from
// (h0, hdot0, T). Enforcing
//   hddot + 2 c T hdot + (c T)^2 h >= 0
// makes h track (or stay above) the envelope (a0 + a1 t) exp(-c T t), which
// starts at h0 < 0 and reaches zero exactly at t = T.
struct FixedTimeParams {
  double T = 0.0;   // deadline [s]
  double c = 0.0;   // envelope rate [1/s^2]
  double a0 = 0.0;  // envelope offset, equals h0
  double a1 = 0.0;  // envelope slope, equals -h0/T
};

// Gains of the standard second-order exponential barrier constraint
//   hddot + k2 hdot + k1 h >= 0.
struct ExpHocbfParams {
  double k1 = 1.0;
  double k2 = 2.0;
};

// Parameters of the finite-time barrier recursion
//   psi0 = h
//   psi1 = hdot + p1 sign(psi0) |psi0|^q1
//   enforce psi1dot + p2 sign(psi1) |psi1|^q2 >= 0
// with the singular |psi0|^(q1-1) factor clamped at eps0.
struct FtBaselineParams {
  double p1 = 1.0;
  double p2 = 1.0;
  double q1 = 0.5;   // in (0, 1)
  double q2 = 0.5;   // in (0, 1)
  double eps0 = 1e-6;
};

// Raised when the fixed-time construction is asked to start on the boundary
// of the safe set (h0 = 0), where its rate is undefined.
struct StartsOnBoundary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when the fixed-time construction is asked to start inside the safe
// set (h0 > 0); reaching in fixed time is moot there, use the exponential
// constraint to stay inside instead.
struct StartsInsideSafeSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Freeze the fixed-time parameters from the initial barrier value and rate.
// Requires h0 < 0 and T > 0.
FixedTimeParams fixed_time_init(double h0, double hdot0, double T);

// Input-space row enforcing hddot + 2cT hdot + (cT)^2 h >= 0.
ConstraintRow fixed_time_row(const BarrierDerivatives& d,
                             const FixedTimeParams& p);

// Input-space row enforcing hddot + k2 hdot + k1 h >= 0.
ConstraintRow exp_hocbf_row(const BarrierDerivatives& d,
                            const ExpHocbfParams& p);

// First-order finite-time condition (relative degree one): returns the lower
// bound on hdot from hdot >= -alpha sign(h) |h|^pexp with
// alpha = |h0|^(1-pexp) / ((1-pexp) T), which drives h to zero by t = T.
double ft_first_order_bound(double h, double h0, double T, double pexp);

// Input-space row of the relative-degree-two finite-time recursion.
ConstraintRow ft_baseline_row(const BarrierDerivatives& d,
                              const FtBaselineParams& p);

// Upper bound on the settling time of the finite-time recursion:
//   sum_i psi_{i-1}^(1-q_i) / (p_i (1 - q_i))
// where psi_prev[i] is psi_{i-1} evaluated when stage i starts.
double ft_baseline_time_bound(const FtBaselineParams& p, double psi0_start,
                              double psi1_start);

}  // namespace ftcbf
