#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "ftcbf/experiments.hpp"
#include "ftcbf/trace_io.hpp"

using namespace ftcbf;

namespace {

std::filesystem::path scratch(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("trace CSV round-trips bitwise") {
  SimConfig cfg = nominal_config(ModelKind::PointMass, Method::FixedTime, 0.5, 1e-3);
  cfg.horizon = 0.75;
  EpisodeTrace tr = run_episode(cfg);
  REQUIRE(tr.rows.size() > 100);

  auto path = scratch("ftcbf_roundtrip.csv");
  write_trace_csv(tr, path.string());
  EpisodeTrace back = read_trace_csv(path.string());
  std::filesystem::remove(path);

  REQUIRE(back.rows.size() == tr.rows.size());
  for (std::size_t k = 0; k < tr.rows.size(); ++k) {
    CHECK(back.rows[k].t == tr.rows[k].t);
    CHECK(back.rows[k].state == tr.rows[k].state);
    CHECK(back.rows[k].h == tr.rows[k].h);
    CHECK(back.rows[k].h_dot == tr.rows[k].h_dot);
    CHECK(back.rows[k].u == tr.rows[k].u);
    CHECK(back.rows[k].slack == tr.rows[k].slack);
  }
  CHECK(back.convergence_time == tr.convergence_time);
}

TEST_CASE("stored barrier column matches the states it was computed from") {
  SimConfig cfg = nominal_config(ModelKind::Unicycle, Method::FixedTime, 0.5, 1e-3);
  cfg.horizon = 0.75;
  EpisodeTrace tr = run_episode(cfg);

  auto path = scratch("ftcbf_hcheck.csv");
  write_trace_csv(tr, path.string());
  EpisodeTrace back = read_trace_csv(path.string());
  std::filesystem::remove(path);

  for (const auto& row : back.rows) {
    State s{row.state, ModelKind::Unicycle};
    CHECK(std::abs(evaluate_barrier(s, cfg.barrier).h - row.h) <= 1e-9);
  }
}

TEST_CASE("reader re-derives convergence from the rows") {
  EpisodeTrace tr;
  for (int k = 0; k < 4; ++k) {
    TraceRow row;
    row.t = 0.5 * k;
    row.h = -1.5 + k;  // crosses zero at k = 2
    tr.rows.push_back(row);
  }
  auto path = scratch("ftcbf_rederive.csv");
  write_trace_csv(tr, path.string());
  EpisodeTrace back = read_trace_csv(path.string());
  std::filesystem::remove(path);

  REQUIRE(back.convergence_time.has_value());
  CHECK(*back.convergence_time == 1.0);
  CHECK(*back.convergence_iteration == 2);
}

TEST_CASE("reader rejects foreign headers and malformed rows") {
  auto path = scratch("ftcbf_badheader.csv");
  {
    std::ofstream out(path);
    out << "time,x,y\n1,2,3\n";
  }
  CHECK_THROWS_AS(read_trace_csv(path.string()), std::runtime_error);
  std::filesystem::remove(path);

  auto path2 = scratch("ftcbf_badrow.csv");
  {
    std::ofstream out(path2);
    out << "t,x1,x2,x3,x4,h,hdot,u1,u2,slack\n";
    out << "0,1,2,3\n";  // too few fields
  }
  CHECK_THROWS_AS(read_trace_csv(path2.string()), std::runtime_error);
  std::filesystem::remove(path2);

  CHECK_THROWS_AS(read_trace_csv(scratch("ftcbf_missing.csv").string()),
                  std::runtime_error);
}
