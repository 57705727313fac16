#include "ftcbf/constraints.hpp"

#include <algorithm>
#include <cmath>

namespace ftcbf {

namespace {

double sign(double x) { return (x > 0.0) - (x < 0.0); }

double sign_pow(double x, double q) {
  return sign(x) * std::pow(std::abs(x), q);
}

}  // namespace

FixedTimeParams fixed_time_init(double h0, double hdot0, double T) {
  if (!(T > 0.0)) {
    throw std::invalid_argument("deadline T must be positive");
  }
  if (h0 == 0.0) {
    throw StartsOnBoundary("h0 = 0: fixed-time rate is undefined on the boundary");
  }
  if (h0 > 0.0) {
    throw StartsInsideSafeSet("h0 > 0: already safe, fixed-time reaching does not apply");
  }
  FixedTimeParams p;
  p.T = T;
  p.c = (-h0 - hdot0 * T) / (h0 * T * T);
  p.a0 = h0;
  p.a1 = hdot0 + p.c * T * h0;  // algebraically equal to -h0/T
  return p;
}

ConstraintRow fixed_time_row(const BarrierDerivatives& d,
                             const FixedTimeParams& p) {
  const double ct = p.c * p.T;
  ConstraintRow row;
  row.a = d.lglfh;
  row.b = -(d.lf2h + 2.0 * ct * d.h_dot + ct * ct * d.h);
  return row;
}

ConstraintRow exp_hocbf_row(const BarrierDerivatives& d,
                            const ExpHocbfParams& p) {
  ConstraintRow row;
  row.a = d.lglfh;
  row.b = -(d.lf2h + p.k2 * d.h_dot + p.k1 * d.h);
  return row;
}

double ft_first_order_bound(double h, double h0, double T, double pexp) {
  if (!(T > 0.0)) {
    throw std::invalid_argument("deadline T must be positive");
  }
  if (!(pexp > 0.0 && pexp < 1.0)) {
    throw std::invalid_argument("exponent must lie in (0, 1)");
  }
  if (h0 == 0.0) {
    throw std::invalid_argument("h0 = 0: finite-time gain is undefined");
  }
  const double alpha = std::pow(std::abs(h0), 1.0 - pexp) / ((1.0 - pexp) * T);
  return -alpha * sign_pow(h, pexp);
}

ConstraintRow ft_baseline_row(const BarrierDerivatives& d,
                              const FtBaselineParams& p) {
  const double psi0 = d.h;
  const double psi1 = d.h_dot + p.p1 * sign_pow(psi0, p.q1);
  // d/dt [p1 sign(psi0)|psi0|^q1] = p1 q1 |psi0|^(q1-1) hdot, clamped at eps0
  // because q1 - 1 < 0 blows up on the boundary.
  const double mag = std::max(std::abs(psi0), p.eps0);
  const double singular_term = p.p1 * p.q1 * std::pow(mag, p.q1 - 1.0) * d.h_dot;
  ConstraintRow row;
  row.a = d.lglfh;
  row.b = -(d.lf2h + singular_term + p.p2 * sign_pow(psi1, p.q2));
  return row;
}

double ft_baseline_time_bound(const FtBaselineParams& p, double psi0_start,
                              double psi1_start) {
  if (!(p.q1 < 1.0 && p.q2 < 1.0)) {
    throw std::invalid_argument("exponents must lie below 1");
  }
  const double t1 =
      std::pow(psi0_start, 1.0 - p.q1) / (p.p1 * (1.0 - p.q1));
  const double t2 =
      std::pow(psi1_start, 1.0 - p.q2) / (p.p2 * (1.0 - p.q2));
  return t1 + t2;
}

}  // namespace ftcbf
