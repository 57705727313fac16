#include <cmath>
#include <random>

#include "doctest.h"
#include "ftcbf/constraints.hpp"

using namespace ftcbf;

TEST_CASE("fixed-time parameters from rest collapse to c = -1/T^2") {
  FixedTimeParams p = fixed_time_init(-1.0, 0.0, 1.0);
  CHECK(p.c == doctest::Approx(-1.0));
  CHECK(p.a0 == doctest::Approx(-1.0));
  CHECK(p.a1 == doctest::Approx(1.0));
  CHECK(p.T == 1.0);
}

TEST_CASE("fixed-time parameters with an inbound initial rate") {
  FixedTimeParams p = fixed_time_init(-1.0, 2.0, 1.0);
  CHECK(p.c == doctest::Approx(1.0));
  CHECK(p.a1 == doctest::Approx(1.0));
  CHECK(p.a0 + p.a1 * p.T == doctest::Approx(0.0));
}

TEST_CASE("fixed-time parameters for the benchmark start") {
  // From (0,0,-10,0): h0 = -4046, hdot0 = -900, T = 10. The system initially
  // recedes, so the envelope rate is negative.
  FixedTimeParams p = fixed_time_init(-4046.0, -900.0, 10.0);
  CHECK(p.c == doctest::Approx(13046.0 / -404600.0).epsilon(1e-12));
  CHECK(p.c < 0.0);
  CHECK(p.a0 == -4046.0);
  CHECK(p.a1 == doctest::Approx(404.6));
  CHECK(std::abs(p.a0 + p.a1 * p.T) < 1e-9);
}

TEST_CASE("fixed-time construction rejects boundary, safe, and bad-deadline starts") {
  CHECK_THROWS_AS(fixed_time_init(0.0, 1.0, 5.0), StartsOnBoundary);
  CHECK_THROWS_AS(fixed_time_init(2.0, 0.0, 5.0), StartsInsideSafeSet);
  CHECK_THROWS_AS(fixed_time_init(-1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fixed_time_init(-1.0, 0.0, -2.0), std::invalid_argument);
}

TEST_CASE("envelope root and slope identities hold across the input range") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> h0d(-5000.0, -50.0);
  std::uniform_real_distribution<double> hd0d(-500.0, 500.0);
  std::uniform_real_distribution<double> Td(2.0, 15.0);
  for (int i = 0; i < 50; ++i) {
    double h0 = h0d(rng), hd0 = hd0d(rng), T = Td(rng);
    FixedTimeParams p = fixed_time_init(h0, hd0, T);
    CHECK(std::abs(p.a0 + p.a1 * p.T) <= 1e-12 * std::abs(h0));
    CHECK(p.a1 >= 0.0);
    CHECK(p.a1 == doctest::Approx(-h0 / T).epsilon(1e-12));
  }
}

TEST_CASE("fixed-time row for the benchmark start") {
  FixedTimeParams p = fixed_time_init(-4046.0, -900.0, 10.0);
  BarrierDerivatives d;
  d.h = -4046.0;
  d.h_dot = -900.0;
  d.lf2h = -200.0;
  d.lglfh = Eigen::Vector2d(90.0, 90.0);
  ConstraintRow row = fixed_time_row(d, p);
  CHECK(row.a(0) == 90.0);
  CHECK(row.a(1) == 90.0);
  // -( lf2h + 2cT hdot + (cT)^2 h ) with the exact c above.
  CHECK(row.b == doctest::Approx(40.2622738507).epsilon(1e-9));
}

TEST_CASE("fixed-time row degenerate cases") {
  BarrierDerivatives zero;
  FixedTimeParams p{10.0, -0.03, -100.0, 10.0};
  ConstraintRow row = fixed_time_row(zero, p);
  CHECK(row.b == 0.0);
  CHECK(row.a.isZero());

  // c = 0 reduces the row to hddot >= 0.
  FixedTimeParams flat{10.0, 0.0, -100.0, 10.0};
  BarrierDerivatives d;
  d.h = -3.0;
  d.h_dot = 17.0;
  d.lf2h = -5.0;
  CHECK(fixed_time_row(d, flat).b == doctest::Approx(5.0));
}

TEST_CASE("exponential row enforces hddot + k2 hdot + k1 h >= 0") {
  BarrierDerivatives d;
  d.h = -1.0;
  d.h_dot = 0.0;
  d.lf2h = 0.0;
  CHECK(exp_hocbf_row(d, ExpHocbfParams{1.0, 2.0}).b == doctest::Approx(1.0));

  BarrierDerivatives boundary;
  boundary.lf2h = -7.0;
  CHECK(exp_hocbf_row(boundary, ExpHocbfParams{1.0, 2.0}).b == doctest::Approx(7.0));
  CHECK(exp_hocbf_row(boundary, ExpHocbfParams{0.0, 0.0}).b == doctest::Approx(7.0));

  BarrierDerivatives full;
  full.h = -4046.0;
  full.h_dot = -900.0;
  full.lf2h = -200.0;
  CHECK(exp_hocbf_row(full, ExpHocbfParams{1.0, 2.0}).b ==
        doctest::Approx(200.0 + 1800.0 + 4046.0));
}

TEST_CASE("first-order finite-time bound") {
  CHECK(ft_first_order_bound(-1.0, -1.0, 1.0, 0.5) == doctest::Approx(2.0));
  CHECK(ft_first_order_bound(0.0, -1.0, 1.0, 0.5) == doctest::Approx(0.0));
  CHECK(ft_first_order_bound(-4.0, -4.0, 2.0, 0.5) == doctest::Approx(4.0));
  CHECK_THROWS_AS(ft_first_order_bound(-1.0, -1.0, 1.0, 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(ft_first_order_bound(-1.0, -1.0, 1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ft_first_order_bound(-1.0, 0.0, 1.0, 0.5),
                  std::invalid_argument);
}

TEST_CASE("first-order bound drives the equality flow to zero at T") {
  const double h0 = -4.0, T = 2.0, pexp = 0.5, dt = 1e-4;
  double h = h0;
  for (long k = 0; k < std::lround(T / dt); ++k)
    h += dt * ft_first_order_bound(h, h0, T, pexp);
  CHECK(std::abs(h) < 1e-6);
}

TEST_CASE("finite-time recursion row on the regularized boundary branch") {
  BarrierDerivatives d;
  d.h = 0.0;
  d.h_dot = 1.0;
  d.lf2h = -7.0;
  FtBaselineParams p;  // p1 = p2 = 1, q1 = q2 = 0.5, eps0 = 1e-6
  ConstraintRow row = ft_baseline_row(d, p);
  // psi1 = 1; singular factor clamps to eps0^(-1/2) = 1000.
  CHECK(row.b == doctest::Approx(-(-7.0 + 0.5 * 1000.0 + 1.0)));
}

TEST_CASE("finite-time recursion row away from the boundary") {
  BarrierDerivatives d;
  d.h = -1.0;
  d.h_dot = 0.0;
  d.lf2h = 0.0;
  FtBaselineParams p;
  // psi1 = -1, so the restoring term has sign -1.
  CHECK(ft_baseline_row(d, p).b == doctest::Approx(1.0));

  FtBaselineParams off;
  off.p1 = 0.0;
  off.p2 = 0.0;
  BarrierDerivatives boundary;
  boundary.lf2h = -7.0;
  CHECK(ft_baseline_row(boundary, off).b == doctest::Approx(7.0));
}

TEST_CASE("finite-time settling bound") {
  FtBaselineParams p;
  CHECK(ft_baseline_time_bound(p, 1.0, 1.0) == doctest::Approx(4.0));
  CHECK(ft_baseline_time_bound(p, 0.0, 0.0) == doctest::Approx(0.0));

  FtBaselineParams p2;
  p2.p1 = 1.0;
  p2.p2 = 2.0;
  CHECK(ft_baseline_time_bound(p2, 4.0, 1.0) == doctest::Approx(5.0));

  FtBaselineParams bad;
  bad.q1 = 1.0;
  CHECK_THROWS_AS(ft_baseline_time_bound(bad, 1.0, 1.0), std::invalid_argument);
}
