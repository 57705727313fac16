#include "ftcbf/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ftcbf {

namespace {

constexpr const char* kHeader = "t,x1,x2,x3,x4,h,hdot,u1,u2,slack";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_trace_csv(const EpisodeTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << kHeader << '\n';
  for (const TraceRow& r : trace.rows) {
    out << fmt(r.t) << ',' << fmt(r.state(0)) << ',' << fmt(r.state(1)) << ','
        << fmt(r.state(2)) << ',' << fmt(r.state(3)) << ',' << fmt(r.h) << ','
        << fmt(r.h_dot) << ',' << fmt(r.u(0)) << ',' << fmt(r.u(1)) << ','
        << fmt(r.slack) << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path);
}

EpisodeTrace read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error(path + ": missing or unexpected header");
  }
  EpisodeTrace trace;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::vector<double> vals;
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      vals.push_back(std::stod(cell));
    }
    if (vals.size() != 10) {
      throw std::runtime_error(path + ": malformed row at line " +
                               std::to_string(line_no));
    }
    TraceRow r;
    r.t = vals[0];
    r.state = Eigen::Vector4d(vals[1], vals[2], vals[3], vals[4]);
    r.h = vals[5];
    r.h_dot = vals[6];
    r.u = ControlInput(vals[7], vals[8]);
    r.slack = vals[9];
    trace.rows.push_back(r);
  }
  if (auto conv = detect_convergence(trace)) {
    trace.convergence_time = conv->first;
    trace.convergence_iteration = conv->second;
  }
  return trace;
}

}  // namespace ftcbf
